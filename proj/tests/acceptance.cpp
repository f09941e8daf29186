// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support.hpp"

using namespace lorentz;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

int failures = 0;

void report(const std::string& id, const std::string& title, const std::function<Outcome()>& body,
            double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.pass = false;
    out.note += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
  }
  if (!out.pass) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (out.pass ? "PASS " : "FAIL ") << id << "  " << title << ": " << out.note << " [" << timing << "]\n";
}

// Collects failed checks with a short label.
struct Checks {
  std::vector<std::string> failed;
  int count = 0;
  void expect(bool ok, const std::string& label) {
    ++count;
    if (!ok) failed.push_back(label);
  }
  Outcome outcome(const std::string& summary) const {
    if (failed.empty()) return {true, summary};
    std::string msg = std::to_string(failed.size()) + " of " + std::to_string(count) + " checks failed:";
    for (std::size_t k = 0; k < failed.size() && k < 5; ++k) msg += " " + failed[k] + ";";
    return {false, msg};
  }
};

const BivariateForm kX3Y3({1, 0, 0, 1});
const BivariateForm kX3Yplus = from_monomial_coeffs({0, 1, 1, 1, 0});
const BivariateForm kX2Y2sum = from_monomial_coeffs({1, 0, 1});
const BivariateForm kBinomial({1, 4, 5, 2, 0});
const BivariateForm kTilde({1, 1, Rational(5, 6), Rational(1, 2), 0});

Rational cofactor_det3(const Matrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// TN forms that are usually not TP: a root at 0, a factor X or Y, one monomial,
// or a power of a linear form.
BivariateForm boundary_candidate(gen::Rng& rng, int d) {
  switch (gen::uniform(rng, 0, 3)) {
    case 0: {
      // t * prod (t + r), read in either direction
      auto c = gen::normally_stable(rng, d - 1).coeffs();
      c.insert(c.begin(), Rational(0));
      if (gen::uniform(rng, 0, 1) == 0) std::reverse(c.begin(), c.end());
      return BivariateForm(std::move(c));
    }
    case 1: return gen::stable(rng, d);
    case 2: {
      std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
      c[gen::uniform(rng, 0, d)] = gen::positive(rng);
      return BivariateForm(std::move(c));
    }
    default: {
      const Rational a = gen::positive(rng, 3), b = gen::positive(rng, 3);
      std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
      for (int k = 0; k <= d; ++k) c[k] = power(a, k) * power(b, d - k);
      return BivariateForm(std::move(c));
    }
  }
}

// ---------------------------------------------------------------------------
// 1. worked examples

Outcome sum_of_squares() {
  Checks c;
  gen::Rng rng(1001);
  for (int k = 0; k < 5; ++k) {
    const auto l = gen::nonzero_point(rng);
    c.expect(check_sl(kX2Y2sum, 1, l).pass, "SL_1 at a random form");
  }
  std::vector<LinearForm> ells{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (ells.size() < 20) ells.push_back(gen::nonzero_point(rng));
  for (const auto& l : ells) {
    const auto v = check_hrr(kX2Y2sum, 1, l);
    c.expect(!v.pass && v.failure && v.failure->degree == 1, "HRR_1 should fail in degree 1");
  }
  return c.outcome("SL_1 holds at 5 random forms; HRR_1 fails at 20 forms including +-x, +-y");
}

Outcome cubes() {
  Checks c;
  const auto p = phi(kX3Y3, 1).dense();
  c.expect(p == Matrix{{0, 0, 1}, {1, 0, 0}}, "phi^1(X^3+Y^3)");
  c.expect(!is_totally_positive(p).pass, "phi^1(X^3+Y^3) not TP");
  const auto g = substitute(kX3Y3, CoordChange::from_rows(-1, -1, 2, 3));
  c.expect(g.coeffs() == std::vector<Rational>{26, 17, 11, 7}, "substituted coefficients");
  c.expect(phi(g, 1).dense() == Matrix{{17, 11, 7}, {26, 17, 11}}, "phi^1 of the substituted form");
  c.expect(is_totally_positive(phi(g, 1)).pass, "TP after substitution");
  c.expect(oracle::all_minors(phi(g, 1).dense(), true), "TP by exhaustive minors");
  c.expect(is_strictly_lorentzian(g, 1).pass, "strictly 1-Lorentzian");
  return c.outcome("phi^1 TP fails, sigma gives c = (26,17,11,7), phi^1 TP, strictly 1-Lorentzian");
}

Outcome three_term() {
  Checks c;
  const Matrix expected{{0, 6, 4}, {6, 4, 6}, {4, 6, 0}};
  const auto h2 = eval_hessian(hessian_spec(kX3Yplus, 2), 1, 1);
  c.expect(h2 == expected, "Hess_2 matrix");
  const Rational cof = cofactor_det3(expected);
  c.expect(determinant(h2) == cof && cof == oracle::leibniz_det(expected), "det(Hess_2) vs cofactor expansion");
  c.expect(signature(h2) == SignatureReport{1, 0, 2}, "signature (1,0,2)");
  c.expect(check_hrr(kX3Yplus, 1, LinearForm{1, 1}).pass, "HRR_1 at (1,1)");
  const auto h = check_hrr(kX3Yplus, 2, LinearForm{1, 1});
  c.expect(!h.pass && h.failure && h.failure->degree == 2, "HRR_2 fails in degree 2");
  const std::array<Matrix, 3> phis{
      Matrix{{0, Rational(1, 4), Rational(1, 6), Rational(1, 4), 0}},
      Rational(1, 12) * Matrix{{3, 2, 3, 0}, {0, 3, 2, 3}},
      Rational(1, 12) * Matrix{{2, 3, 0}, {3, 2, 3}, {0, 3, 2}}};
  for (int i = 0; i <= 2; ++i) {
    c.expect(phi(kX3Yplus, i).dense() == phis[i], "phi^" + std::to_string(i));
    const bool expect_pass = i == 0;
    c.expect(check_mixed_hrr_cone(kX3Yplus, i, Cone::open).pass == expect_pass, "cone verdict i=" + std::to_string(i));
    c.expect(oracle::all_minors(phis[i], false) == expect_pass, "TN oracle i=" + std::to_string(i));
  }
  std::ostringstream note;
  note << "Hess_2 = ((0,6,4),(6,4,6),(4,6,0)), det " << to_string(cof)
       << " (cofactor expansion; the value 64 quoted for this example does not match the matrix), "
       << "HRR_1 pass, HRR_2 fail at j=2, cone verdicts pass/fail/fail";
  return c.outcome(note.str());
}

Outcome normally_stable_example() {
  Checks c;
  const auto tilde2 = phi(kTilde, 2).dense();
  c.expect(determinant(tilde2) == Rational(-1, 216), "tilde 3x3 determinant");
  const auto tn = is_totally_nonnegative(tilde2);
  c.expect(!tn.pass && tn.witness && tn.witness->value == Rational(-1, 216), "tilde TN fails with -1/216");
  c.expect(phi(kBinomial, 2).dense() == Matrix{{5, 2, 0}, {4, 5, 2}, {1, 4, 5}}, "binomial phi^2");
  c.expect(is_lorentzian(kBinomial, 2).pass, "binomial TN at i=2");
  const auto strict = is_strictly_lorentzian(kBinomial, 2);
  c.expect(!strict.pass && strict.witness && strict.witness->value == 0, "strict fails on c_4 = 0");
  c.expect(is_normally_stable(kBinomial).pass, "normally stable");
  const auto rc = count_roots(Polynomial({0, 2, 5, 4, 1}));
  c.expect(rc.total_real == 4 && rc.nonpositive_real == 4, "Sturm count of t^4+4t^3+5t^2+2t");
  return c.outcome("tilde det -1/216 TN fail; binomial TN pass, strict fail via c_4 = 0; normally stable; 4 nonpositive roots");
}

Outcome cryer() {
  Checks c;
  const Matrix b{{1, 1, 1, 0}, {1, 1, 1, 1}, {0, 1, 1, 1}};
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t r = 0; r + k <= 3; ++r)
      for (std::size_t col = 0; col + k <= 4; ++col) {
        std::vector<std::size_t> rows(k), cols(k);
        for (std::size_t j = 0; j < k; ++j) rows[j] = r + j, cols[j] = col + j;
        c.expect(oracle::minor_det(b, rows, cols) >= 0, "consecutive minor");
      }
  const auto v = is_totally_nonnegative(b);
  c.expect(!v.pass && v.witness, "TN fails");
  if (v.witness) {
    c.expect(v.witness->rows == std::vector<std::size_t>{0, 1, 2}, "witness rows");
    c.expect(v.witness->cols == std::vector<std::size_t>{0, 1, 3}, "witness cols");
    c.expect(v.witness->value == -1, "witness value");
  }
  return c.outcome("consecutive minors >= 0, TN fails at I={0,1,2}, J={0,1,3} with -1");
}

// ---------------------------------------------------------------------------
// 2. oracle equivalences

constexpr int kOracleTrials = 200;

Outcome fekete() {
  Checks c;
  gen::Rng rng(2001);
  int positives = 0;
  for (int t = 0; t < kOracleTrials; ++t) {
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto k = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
    Matrix m = t % 3 == 0 ? gen::matrix(rng, r, k, 1, 9) : gen::vandermonde(rng, r, k);
    if (t % 3 == 2) m(gen::uniform(rng, 0, r - 1), gen::uniform(rng, 0, k - 1)) += gen::rational(rng, -2, 2);
    const bool expected = oracle::all_minors(m, true);
    positives += expected;
    c.expect(is_totally_positive(m).pass == expected, "trial " + std::to_string(t));
  }
  return c.outcome(std::to_string(kOracleTrials) + " matrices up to 5x7 (" + std::to_string(positives) +
                   " TP), consecutive test = all-minor Leibniz oracle");
}

Outcome lgv() {
  Checks c;
  gen::Rng rng(2002);
  for (int t = 0; t < kOracleTrials; ++t) {
    const int s = static_cast<int>(gen::uniform(rng, 0, 3));
    std::vector<LinearForm> w;
    for (int k = 0; k < s; ++k) w.push_back(t % 2 ? gen::positive_point(rng) : gen::nonzero_point(rng));
    const auto k = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    auto sample = [&] {
      std::vector<long> pool{0, 1, 2, 3, 4, 5, 6, 7};
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(k);
      std::sort(pool.begin(), pool.end());
      return pool;
    };
    const auto rows = sample(), cols = sample();
    c.expect(lgv_minor_oracle(s, w, rows, cols) == oracle::leibniz_det(path_matrix(s, w, rows, cols)),
             "trial " + std::to_string(t));
  }
  return c.outcome(std::to_string(kOracleTrials) + " windows up to 5x5 with s <= 3, path enumeration = determinant");
}

Outcome factorization() {
  Checks c;
  gen::Rng rng(2003);
  for (int t = 0; t < kOracleTrials; ++t) {
    const int d = static_cast<int>(gen::uniform(rng, 0, 8));
    const auto f = gen::form(rng, d);
    for (int i = 0; 2 * i <= d; ++i)
      c.expect(verify_factorization(f, i, gen::positive_points(rng, d - 2 * i)).pass, "trial " + std::to_string(t));
  }
  return c.outcome(std::to_string(kOracleTrials) + " random forms d <= 8, every i, positive points");
}

Outcome signatures() {
  Checks c;
  gen::Rng rng(2004);
  for (int t = 0; t < kOracleTrials; ++t) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    Matrix m = gen::symmetric(rng, n, -3, 3);
    if (t % 4 == 0)
      for (std::size_t k = 0; k < n; ++k) m(k, k) = 0;
    if (t % 5 == 0 && n > 1)
      for (std::size_t k = 0; k < n; ++k) m(n - 1, k) = m(k, n - 1) = m(0, k);
    const auto expected = oracle::inertia_from_charpoly(oracle::charpoly(m));
    const auto got = signature(m);
    c.expect(got.n_plus == expected.plus && got.n_zero == expected.zero && got.n_minus == expected.minus,
             "trial " + std::to_string(t));
  }
  return c.outcome(std::to_string(kOracleTrials) +
                   " symmetric matrices up to 6x6, congruence inertia = characteristic-polynomial inertia");
}

// ---------------------------------------------------------------------------
// 3. properties

constexpr int kPropertyTrials = 100;

Outcome strict_chain() {
  Checks c;
  gen::Rng rng(3001);
  int strict = 0, checks = 0;
  for (int t = 0; t < kPropertyTrials; ++t) {
    const int d = static_cast<int>(gen::uniform(rng, 0, 7));
    const auto f = t % 2 ? gen::positive_form(rng, d) : gen::form(rng, d, -1, 8);
    for (int i = 0; 2 * i <= d; ++i) {
      const bool tp = oracle::all_minors(phi(f, i).dense(), true);
      strict += tp;
      ++checks;
      c.expect(is_strictly_lorentzian(f, i).pass == tp, "strict vs oracle");
      c.expect(lorentz_determinants_positive(f, i).pass == tp, "defining determinants vs oracle");
      if (!f.is_zero()) c.expect(check_mixed_hrr_cone(f, i, Cone::closed).pass == tp, "closed cone vs oracle");
    }
  }
  return c.outcome(std::to_string(kPropertyTrials) + " forms, " + std::to_string(checks) + " orders (" +
                   std::to_string(strict) + " strict): defining determinants = Fekete = exhaustive TP = closed cone");
}

Outcome nonstrict_and_approximation() {
  Checks c;
  gen::Rng rng(3002);
  ApproxOptions opts;
  opts.epsilon = detail::dyadic(20);
  int approximated = 0, attempts = 0, constructed = 0, rank_raised = 0;
  while (approximated < kPropertyTrials && attempts < 20 * kPropertyTrials) {
    ++attempts;
    const int d = static_cast<int>(gen::uniform(rng, 1, 6));
    const auto f = attempts % 4 == 0 ? gen::form(rng, d, -1, 6) : boundary_candidate(rng, d);
    const int i = static_cast<int>(gen::uniform(rng, 0, d / 2));
    const bool tn = oracle::all_minors(phi(f, i).dense(), false);
    c.expect(is_lorentzian(f, i).pass == tn, "TN vs oracle");
    if (!f.is_zero()) c.expect(check_mixed_hrr_cone(f, i, Cone::open).pass == tn, "open cone vs oracle");
    if (!tn || f.is_zero()) continue;
    ++approximated;
    const auto steps = approximate_tp(f, i, opts);
    const auto& last = steps.back();
    c.expect(last.distance < opts.epsilon && sup_distance(last.form, f) == last.distance, "distance");
    c.expect(oracle::all_minors(phi(last.form, i).dense(), true), "approximation TP");
    constructed += last.t_final > 0;
    rank_raised += !last.rank_steps.empty();
  }
  c.expect(approximated >= kPropertyTrials, "too few TN forms");
  c.expect(constructed >= kPropertyTrials / 2 && rank_raised >= 10, "too few forms needing the construction");
  return c.outcome(std::to_string(attempts) + " forms: Lorentzian = TN oracle = open cone; " +
                   std::to_string(approximated) + " TN forms approximated by TP forms within 2^-20 (" +
                   std::to_string(constructed) + " not already TP, " + std::to_string(rank_raised) +
                   " needing rank steps)");
}

Outcome normally_stable_lorentzian() {
  Checks c;
  gen::Rng rng(3003);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const int d = static_cast<int>(gen::uniform(rng, 0, 10));
    const auto f = gen::normally_stable(rng, d);
    c.expect(is_normally_stable(f).pass, "constructed form normally stable");
    for (int i = 0; 2 * i <= d; ++i) c.expect(is_lorentzian(f, i).pass, "i-Lorentzian");
  }
  return c.outcome(std::to_string(kPropertyTrials) + " products of (t + r), r >= 0, d <= 10: Lorentzian in every order");
}

Outcome stability_implications() {
  Checks c;
  gen::Rng rng(3004);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const int d = static_cast<int>(gen::uniform(rng, 2, 9));
    const auto f = gen::stable(rng, d);
    c.expect(is_stable(f).pass, "constructed form stable");
    c.expect(is_lorentzian(f, 1).pass, "stable => 1-Lorentzian");
    const auto g = gen::normally_stable(rng, d);
    c.expect(is_stable(g).pass, "normally stable => stable");
  }
  return c.outcome(std::to_string(kPropertyTrials) + " stable forms are 1-Lorentzian; " +
                   std::to_string(kPropertyTrials) + " normally stable forms are stable");
}

Outcome algebra_properties() {
  Checks c;
  gen::Rng rng(3005);
  int hrr = 0, closure = 0;
  for (int t = 0; t < kPropertyTrials; ++t) {
    const int d = static_cast<int>(gen::uniform(rng, 1, 7));
    const auto f = t % 2 ? gen::positive_form(rng, d) : gen::form(rng, d, -2, 5);
    if (f.is_zero()) continue;
    const auto ell = t % 3 ? gen::positive_point(rng) : gen::nonzero_point(rng);
    const int i = d / 2;
    if (check_hrr(f, i, ell).pass) {
      ++hrr;
      c.expect(check_sl(f, i, ell).pass, "HRR => SL");
    }
    for (int j = 0; 2 * j <= d - 1; ++j) {
      if (!is_strictly_lorentzian(f, j).pass) continue;
      ++closure;
      c.expect(is_strictly_lorentzian(derive(f, LinearForm{1, 0}), j).pass, "x derivative");
      c.expect(is_strictly_lorentzian(derive(f, LinearForm{0, 1}), j).pass, "y derivative");
    }
    const auto p = profile(f);
    for (int j = 0; j <= d; ++j) c.expect(p.hilbert[j] == oracle::derivative_span_rank(f, j), "h_j");
  }
  c.expect(hrr >= 20 && closure >= 20, "too few qualifying samples");
  return c.outcome(std::to_string(hrr) + " HRR witnesses satisfy SL; " + std::to_string(closure) +
                   " strict forms closed under x, y derivatives; rank(phi^i) = h_i on " +
                   std::to_string(kPropertyTrials) + " forms");
}

// ---------------------------------------------------------------------------
// 4. determinism

struct CliRun {
  std::string out;
  int code = -1;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string("cd '") + LORENTZ_SAMPLES + "' && '" + LORENTZ_BIN + "'";
  std::istringstream words(args);
  for (std::string w; words >> w;) cmd += " '" + w + "'";
  cmd += " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinism() {
  Checks c;
  std::ifstream in(std::string(LORENTZ_SAMPLES) + "/cases.txt");
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    // arguments may themselves contain '|'
    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string::npos) continue;
    const std::vector<std::string> parts{line.substr(0, bar1), line.substr(bar1 + 1, bar2 - bar1 - 1),
                                         line.substr(bar2 + 1)};
    const std::string name(detail::trim(parts[0]));
    const int code = std::stoi(std::string(detail::trim(parts[1])));
    std::ifstream golden(std::string(LORENTZ_SAMPLES) + "/golden/" + name + ".json");
    std::stringstream expected;
    expected << golden.rdbuf();
    const auto a = run_cli(std::string(parts[2]));
    const auto b = run_cli(std::string(parts[2]));
    ++cases;
    c.expect(a.out == b.out && a.code == b.code, name + " differs between runs");
    c.expect(a.out == expected.str(), name + " differs from golden");
    c.expect(a.code == code, name + " exit code");
  }
  c.expect(cases > 0, "no fixture cases found");
  return c.outcome(std::to_string(cases) + " fixture invocations byte-identical across two runs and equal to goldens");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  report("1.1", "sum of squares X^2+Y^2", sum_of_squares);
  report("1.2", "X^3+Y^3 and its straightening", cubes);
  report("1.3", "X^3Y+X^2Y^2+XY^3", three_term);
  report("1.4", "normally stable binomial form", normally_stable_example);
  report("1.5", "Cryer matrix", cryer);
  const double examples = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report("1", "worked examples total time", [&] {
    return Outcome{examples < 1.0, std::to_string(examples) + " s for criteria 1.1-1.5 (limit 1 s)"};
  });

  const auto oracle_start = std::chrono::steady_clock::now();
  report("2.1", "Fekete criterion", fekete);
  report("2.2", "LGV lemma", lgv);
  report("2.3", "mixed Hessian factorization", factorization);
  report("2.4", "signature", signatures);
  const double oracles = std::chrono::duration<double>(std::chrono::steady_clock::now() - oracle_start).count();
  report("2", "oracle equivalences total time", [&] {
    return Outcome{oracles < 60.0, std::to_string(oracles) + " s for criteria 2.1-2.4 (limit 60 s)"};
  });

  report("3.1", "strict Lorentzian equivalences", strict_chain);
  report("3.2", "Lorentzian = TN, TP approximation", nonstrict_and_approximation);
  report("3.3", "normally stable => Lorentzian", normally_stable_lorentzian);
  report("3.4", "stable => 1-Lorentzian, normally stable => stable", stability_implications);
  report("3.5", "HRR => SL, derivative closure, Hilbert function", algebra_properties);

  report("4", "CLI determinism", determinism);

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
