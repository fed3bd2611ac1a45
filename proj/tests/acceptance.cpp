// Runs the acceptance criteria end to end and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "logzeta/special.hpp"
#include "logzeta/verify.hpp"
#include "oracles.hpp"

using namespace logzeta;
using namespace logzeta::mp;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(const Real& x) { return x.to_scientific(3); }

verify::Options options_with(double tol) {
  verify::Options o;
  o.tol = Real(tol, 64);
  return o;
}

const PrecisionContext kCtx(256);

// Records with r > s from the 12 x 12 x 5 box, shared by the first two criteria.
const std::vector<verify::VerificationRecord>& theorem1a_records(double* elapsed) {
  static double seconds = 0;
  static const auto records = [] {
    const auto start = Clock::now();
    auto options = options_with(1e-30);
    options.quad_stride = 0;
    std::vector<verify::VerificationRecord> out;
    for (auto& r : verify::verify_theorem1({12, 12, 5}, kCtx, options)) {
      const auto& m = std::get<exact::MonomialSpec>(r.spec);
      if (m.r > m.s) out.push_back(std::move(r));
    }
    seconds = seconds_since(start);
    return out;
  }();
  if (elapsed) *elapsed = seconds;
  return records;
}

Outcome criterion1() {
  double seconds = 0;
  const auto& records = theorem1a_records(&seconds);
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.passed ? 0 : 1;
  const bool ok = records.size() == 468 && failed == 0 && seconds < 120;
  std::ostringstream os;
  os << records.size() << " specs, " << failed << " failed, " << seconds << " s";
  return {ok, os.str()};
}

Outcome criterion2() {
  const auto& records = theorem1a_records(nullptr);
  std::size_t exceptions = 0;
  for (const auto& r : records) exceptions += (r.divisibility && r.divisibility->holds) ? 0 : 1;
  std::ostringstream os;
  os << records.size() << " denominators checked, " << exceptions << " exceptions";
  return {records.size() == 468 && exceptions == 0, os.str()};
}

Outcome criterion3() {
  auto options = options_with(1e-30);
  std::size_t index = 0, quads = 0, failed = 0;
  for (unsigned r = 0; r <= 8; ++r) {
    for (unsigned n = 0; n <= 5; ++n, ++index) {
      const bool with_quad = index % 4 == 0;
      const auto record = verify::verify_spec(exact::MonomialSpec{r, r, n}, kCtx, options, with_quad);
      quads += with_quad ? 1 : 0;
      failed += record.passed ? 0 : 1;
      if (!record.passed) std::cerr << "  criterion 3: " << integrals::describe(record.spec) << " " << record.notes << "\n";
    }
  }
  std::ostringstream os;
  os << index << " specs (" << quads << " with 2-D quadrature), " << failed << " failed";
  return {failed == 0, os.str()};
}

Outcome criterion4() {
  bool ok = true;
  Real worst(0L, 64);
  for (unsigned n = 0; n <= 8; ++n) {
    const auto form = exact::corollary_form(n);
    ok = ok && form.constant == -exact::Rational(exact::factorial(n)) &&
         form.zeta_coeff == exact::Rational(exact::factorial(n + 1)) && form.zeta_arg == n + 2;
    const Real value = special::eval_form(form, kCtx);
    const Complex rhs = verify::rhs_value(Complex(static_cast<long>(n), 256), kCtx);
    const Real delta = abs(rhs - value);
    worst = max(worst, delta);
    ok = ok && delta <= pow2(-240, 64);
  }
  return {ok, "max |eval_form - rhs_value| = " + sci(worst)};
}

Outcome criterion5() {
  const auto start = Clock::now();
  const auto records = verify::verify_conjecture(verify::default_grid(256), kCtx, options_with(1e-18));
  const double seconds = seconds_since(start);
  std::size_t failed = 0;
  Real worst_reduce(0L, 64);
  bool reduce_ok = true;
  for (const auto& r : records) {
    failed += r.passed ? 0 : 1;
    for (const auto& c : r.comparisons) {
      if (c.method_a == "reduce1d" || c.method_b == "reduce1d") {
        worst_reduce = max(worst_reduce, c.delta);
        reduce_ok = reduce_ok && c.delta <= Real(1e-12, 64);
      }
    }
  }
  std::ostringstream os;
  os << records.size() << " points, " << failed << " failed, max reduce1d delta " << sci(worst_reduce) << ", "
     << seconds << " s";
  return {records.size() == 14 && failed == 0 && reduce_ok && seconds < 300, os.str()};
}

Outcome criterion6() {
  std::vector<Real> offsets;
  for (const char* e : {"1e-1", "1e-2", "1e-3", "1e-4", "1e-5", "1e-6"}) offsets.push_back(Real::parse(e, 288));
  const auto study = verify::gamma_limit_study(offsets, kCtx, Real(1e-30, 64));
  const Real gamma = special::euler_gamma(kCtx);
  const std::string digits = gamma.to_scientific(19);  // 5.77215664901532860...e-01
  const bool digits_ok = digits.rfind("5.77215664901532860", 0) == 0;
  const Real oracle_delta = abs(gamma - oracle::euler_gamma_harmonic(192));
  const bool ok = study.reference_delta < Real(1e-9, 64) && digits_ok && oracle_delta < Real(1e-18, 64);
  return {ok, "extrapolation delta " + sci(study.reference_delta) + ", harmonic oracle delta " + sci(oracle_delta)};
}

Outcome criterion7() {
  bool ok = true;
  std::ostringstream os;
  // Γ recurrence.
  Real worst(0L, 64);
  for (const auto& z : oracle::sample_points(11, 64, 0.1, 10.0, 10.0, 256)) {
    const Complex lhs = special::gamma(z + 1L, kCtx);
    worst = max(worst, oracle::relative_error(z * special::gamma(z, kCtx), lhs));
  }
  ok = ok && worst < pow2(4 - 256, 64);
  os << "gamma recurrence " << sci(worst);
  // Closed forms.
  const Real p = pi(256);
  const Real z2 = abs(special::zeta(Complex(2L, 256), kCtx) - Complex(p * p / 6L)) / (p * p / 6L);
  const Real z4 = abs(special::zeta(Complex(4L, 256), kCtx) - Complex(pow(p, 4L) / 90L)) / (pow(p, 4L) / 90L);
  ok = ok && z2 <= pow2(-255, 64) && z4 <= pow2(-255, 64);
  os << ", zeta(2) " << sci(z2) << ", zeta(4) " << sci(z4);
  // Pole subtraction.
  Real pole(0L, 64);
  for (const auto& s : oracle::sample_points(12, 64, 0.1, 6.0, 6.0, 256)) {
    if (abs(s - 1L) < Real(0.25, 64)) continue;
    const Complex a = special::zeta_minus_pole(s, kCtx) + reciprocal(s - 1L);
    pole = max(pole, abs(a - special::zeta(s, kCtx)));
  }
  ok = ok && pole < pow2(8 - 256, 64);
  os << ", pole consistency " << sci(pole);
  // Eta acceleration vs Euler–Maclaurin.
  const PrecisionContext ctx128(128);
  Real eta(0L, 64);
  int count = 0;
  for (const auto& s : oracle::sample_points(2024, 100, 0.1, 6.0, 6.0, 128)) {
    if (abs(s - 1L) < Real(0.05, 64)) continue;
    if (count == 64) break;
    ++count;
    eta = max(eta, oracle::relative_error(special::zeta(s, ctx128), oracle::zeta_eta(s.rounded(192), 192, 160)));
  }
  ok = ok && count == 64 && eta < pow2(8 - 128, 64);
  os << ", eta vs EM (" << count << " points) " << sci(eta);
  return {ok, os.str()};
}

Outcome criterion8() {
  std::ostringstream out1, out8, err;
  const int c1 = cli::run_cli({"verify-conjecture", "--jobs", "1"}, out1, err);
  const int c8 = cli::run_cli({"verify-conjecture", "--jobs", "8"}, out8, err);
  const bool same = out1.str() == out8.str();
  std::ostringstream os;
  os << "exit codes " << c1 << "/" << c8 << ", " << out1.str().size() << " bytes, "
     << (same ? "identical" : "DIFFERENT");
  return {c1 == 0 && c8 == 0 && same && !out1.str().empty(), os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"rational closed forms, 0 <= s < r <= 12, n <= 5, tol 1e-30", criterion1},
      {"denominator divides d_r^(n+2) in the same sweep", criterion2},
      {"zeta closed forms r = s <= 8, n <= 5, series 1e-30, sampled quad 1e-9", criterion3},
      {"corollary forms exact and equal to rhs_value to 2^-240", criterion4},
      {"conjecture grid at 1e-18, reduce1d within 1e-12", criterion5},
      {"limit z -> -1 extrapolates to euler_gamma within 1e-9", criterion6},
      {"special-function invariants", criterion7},
      {"verify-conjecture --jobs 1 vs --jobs 8 byte-identical", criterion8},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome outcome{false, ""};
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += outcome.passed ? 0 : 1;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  [" << index << "] " << name << "  (" << outcome.detail
              << ")" << std::endl;
  }
  return failures;
}
