#pragma once

#include "lorentz/error.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/bipoly.hpp"
#include "lorentz/verdict.hpp"
#include "lorentz/toeplitz.hpp"
#include "lorentz/hessian.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/stability.hpp"
#include "lorentz/ag_algebra.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/lgv.hpp"
