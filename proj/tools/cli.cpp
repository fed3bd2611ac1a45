#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "logzeta/errors.hpp"
#include "logzeta/report.hpp"
#include "logzeta/verify.hpp"

namespace logzeta::cli {

namespace {

using mp::Complex;
using mp::Real;

struct Common {
  unsigned precision = 256;
  std::string tol = "1e-30";
  std::string quad_tol = "1e-9";
  std::string format = "json";
  std::string output;
  unsigned jobs = 1;
};

unsigned default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return 256;
  char* end = nullptr;
  const unsigned long bits = std::strtoul(env, &end, 10);
  if (*end != '\0' || bits < 64 || bits > 1u << 20) {
    throw UsageError(std::string(kPrecisionEnv) + " must be an integer number of bits >= 64, got '" + env + "'");
  }
  return static_cast<unsigned>(bits);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    parts.push_back(item);
  }
  if (parts.empty()) throw UsageError("empty list");
  return parts;
}

Real positive(const std::string& text, const std::string& flag) {
  Real value = Real::parse(text, 64);
  if (value.sign() <= 0) throw UsageError(flag + " must be positive, got '" + text + "'");
  return value;
}

Complex complex_point(const std::string& text, mp::Prec prec) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("complex point '" + text + "' must be written re:im");
  return Complex(Real::parse(text.substr(0, colon), prec), Real::parse(text.substr(colon + 1), prec));
}

void add_common(CLI::App* cmd, Common& common, bool with_quad_tol) {
  cmd->add_option("--precision", common.precision, "Working precision in bits (>= 64)")
      ->capture_default_str()
      ->check(CLI::Range(64u, 1u << 20));
  cmd->add_option("--tol", common.tol, "Requested tolerance (decimal string)")->capture_default_str();
  if (with_quad_tol) {
    cmd->add_option("--quad-tol", common.quad_tol, "Tolerance for 2-D quadrature comparisons")
        ->capture_default_str();
  }
  cmd->add_option("--format", common.format, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output", common.output, "Write the report to this file instead of stdout");
}

struct Prepared {
  PrecisionContext ctx;
  verify::Options options;
  report::ReportConfig config;
  report::Format format;
};

Prepared prepare(const Common& common, const std::string& command) {
  Prepared p{PrecisionContext(common.precision), {}, {}, report::parse_format(common.format)};
  p.options.tol = positive(common.tol, "--tol");
  p.options.quad_tol = positive(common.quad_tol, "--quad-tol");
  p.options.jobs = common.jobs;
  p.config.digits = report::digits_for_bits(common.precision);
  p.config.entries = {{"command", command},
                      {"precision_bits", std::to_string(common.precision)},
                      {"tol", common.tol},
                      {"quad_tol", common.quad_tol}};
  return p;
}

int deliver(const std::vector<verify::VerificationRecord>& records, const Prepared& p, const Common& common,
            std::ostream& out) {
  const std::string doc = report::emit(records, p.config, p.format);
  if (common.output.empty()) {
    out << doc;
  } else {
    report::write_file(common.output, doc);
  }
  for (const auto& r : records) {
    if (!r.passed) return kExitFailure;
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Common common;
  try {
    common.precision = default_precision();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Evaluate and verify logarithmic double integrals over the unit square", "logzeta"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one integral by every available method");
  add_common(eval, common, true);
  std::optional<unsigned> r, s, n;
  std::string z_text, zi_text = "0";
  bool eval_quad = false;
  eval->add_option("--r", r, "Exponent of x");
  eval->add_option("--s", s, "Exponent of y");
  eval->add_option("--n", n, "Power of ln(xy)");
  eval->add_option("--z", z_text, "Real part of z (conjecture integral)");
  eval->add_option("--zi", zi_text, "Imaginary part of z")->capture_default_str();
  eval->add_flag("--quad", eval_quad, "Also run the 2-D quadrature (slow)");

  // verify-theorem1
  auto* thm = app.add_subcommand("verify-theorem1", "Check the monomial closed forms over an (r, s, n) box");
  add_common(thm, common, true);
  verify::MonomialBox box{3, 3, 3};
  unsigned quad_stride = 4;
  thm->add_option("--r-max", box.r_max)->capture_default_str();
  thm->add_option("--s-max", box.s_max)->capture_default_str();
  thm->add_option("--n-max", box.n_max)->capture_default_str();
  thm->add_option("--quad-stride", quad_stride, "Run 2-D quadrature on every k-th spec; 0 disables")
      ->capture_default_str();
  thm->add_option("--jobs", common.jobs)->capture_default_str()->check(CLI::PositiveNumber);

  // verify-conjecture
  auto* conj = app.add_subcommand("verify-conjecture", "Check the conjectured identity on a grid of z");
  add_common(conj, common, true);
  std::string grid_name = "default";
  std::string real_points, complex_points;
  bool conj_quad = false;
  conj->add_option("--grid", grid_name, "Base grid")->capture_default_str()->check(CLI::IsMember({"default", "none"}));
  conj->add_option("--real-points", real_points, "Extra real points, comma separated");
  conj->add_option("--complex-points", complex_points, "Extra complex points re:im, comma separated");
  conj->add_flag("--quad", conj_quad, "Also run the 2-D quadrature on every point (slow)");
  conj->add_option("--jobs", common.jobs)->capture_default_str()->check(CLI::PositiveNumber);

  // gamma-limit
  auto* limit = app.add_subcommand("gamma-limit", "Extrapolate the integral at z = -1 + eps to eps = 0");
  add_common(limit, common, false);
  std::string offsets_text = "1e-1,1e-2,1e-3,1e-4,1e-5,1e-6";
  std::string threshold_text = "1e-9";
  limit->add_option("--offsets", offsets_text, "Strictly decreasing offsets in (0, 1)")->capture_default_str();
  limit->add_option("--threshold", threshold_text, "Allowed distance to Euler's constant")->capture_default_str();

  auto* schema = app.add_subcommand("report-schema", "Print the JSON Schema of the report");
  std::string schema_output;
  schema->add_option("--output", schema_output, "Write the schema to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*schema) {
      if (schema_output.empty()) {
        out << report::report_schema();
      } else {
        report::write_file(schema_output, report::report_schema());
      }
      return kExitPass;
    }

    if (*eval) {
      const bool monomial = r || s || n;
      if (monomial == !z_text.empty() || (!monomial && eval->count("--zi") && z_text.empty())) {
        throw UsageError("eval needs either --r/--s/--n or --z [--zi]");
      }
      if (monomial && !(r && s && n)) throw UsageError("eval needs all of --r, --s and --n");
      Prepared p = prepare(common, "eval");
      integrals::IntegralSpec spec;
      if (monomial) {
        spec = exact::MonomialSpec{*r, *s, *n};
        p.config.entries.push_back({"r", std::to_string(*r)});
        p.config.entries.push_back({"s", std::to_string(*s)});
        p.config.entries.push_back({"n", std::to_string(*n)});
      } else {
        const Complex z(Real::parse(z_text, p.ctx.working()), Real::parse(zi_text, p.ctx.working()));
        try {
          spec = integrals::make_conjecture_spec(z);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
        p.config.entries.push_back({"z", z_text});
        p.config.entries.push_back({"zi", zi_text});
      }
      p.config.entries.push_back({"quad", eval_quad ? "true" : "false"});
      const auto record = verify::verify_spec(spec, p.ctx, p.options, eval_quad);
      return deliver({record}, p, common, out);
    }

    if (*thm) {
      Prepared p = prepare(common, "verify-theorem1");
      p.options.quad_stride = quad_stride;
      p.config.entries.push_back({"r_max", std::to_string(box.r_max)});
      p.config.entries.push_back({"s_max", std::to_string(box.s_max)});
      p.config.entries.push_back({"n_max", std::to_string(box.n_max)});
      p.config.entries.push_back({"quad_stride", std::to_string(quad_stride)});
      return deliver(verify::verify_theorem1(box, p.ctx, p.options), p, common, out);
    }

    if (*conj) {
      Prepared p = prepare(common, "verify-conjecture");
      p.options.conjecture_quad = conj_quad;
      verify::GridSpec grid;
      if (grid_name == "default") grid = verify::default_grid(p.ctx.working());
      if (!real_points.empty()) {
        for (const auto& t : split(real_points, ',')) grid.real_points.emplace_back(Real::parse(t, p.ctx.working()));
      }
      if (!complex_points.empty()) {
        for (const auto& t : split(complex_points, ',')) grid.complex_points.push_back(complex_point(t, p.ctx.working()));
      }
      if (grid.real_points.empty() && grid.complex_points.empty()) throw UsageError("the grid is empty");
      try {
        verify::validate(grid);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      p.config.entries.push_back({"grid", grid_name});
      p.config.entries.push_back({"real_points", real_points});
      p.config.entries.push_back({"complex_points", complex_points});
      p.config.entries.push_back({"quad", conj_quad ? "true" : "false"});
      return deliver(verify::verify_conjecture(grid, p.ctx, p.options), p, common, out);
    }

    if (*limit) {
      Prepared p = prepare(common, "gamma-limit");
      p.config.entries.pop_back();  // no quadrature here
      std::vector<Real> offsets;
      for (const auto& t : split(offsets_text, ',')) offsets.push_back(Real::parse(t, p.ctx.internal()));
      const Real threshold = positive(threshold_text, "--threshold");
      p.config.entries.push_back({"offsets", offsets_text});
      p.config.entries.push_back({"threshold", threshold_text});
      const auto study = verify::gamma_limit_study(offsets, p.ctx, p.options.tol);
      return deliver({verify::limit_record(study, threshold)}, p, common, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace logzeta::cli
