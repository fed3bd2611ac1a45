#include "logzeta/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "logzeta/errors.hpp"

namespace logzeta::report {

namespace {

using json = nlohmann::ordered_json;
using verify::VerificationRecord;

// Grid points are short decimals; the full value precision would only print rounding noise.
int spec_digits(int digits) { return std::min(digits, 20); }

std::string bound_string(const mp::Real& x) { return x.to_scientific(kBoundDigits); }

json spec_json(const integrals::IntegralSpec& spec, int digits) {
  json out;
  if (const auto* m = std::get_if<exact::MonomialSpec>(&spec)) {
    out["kind"] = "monomial";
    out["r"] = m->r;
    out["s"] = m->s;
    out["n"] = m->n;
  } else {
    const auto& z = std::get<integrals::ConjectureSpec>(spec).z;
    out["kind"] = "conjecture";
    out["z_re"] = z.re.to_scientific(digits);
    out["z_im"] = z.im.to_scientific(digits);
  }
  return out;
}

json record_json(const VerificationRecord& record, int digits) {
  json out;
  out["spec"] = integrals::describe(record.spec, spec_digits(digits));
  out["spec_fields"] = spec_json(record.spec, spec_digits(digits));
  if (record.closed_form) {
    out["closed_form"] = {{"expression", record.closed_form->expression},
                          {"value", format_complex(record.closed_form->value, digits)},
                          {"error_bound", bound_string(record.closed_form->error_bound)}};
  } else {
    out["closed_form"] = nullptr;
  }
  json values = json::array();
  for (const auto& v : record.method_values) {
    values.push_back({{"method", integrals::to_string(v.method)},
                      {"value", format_complex(v.value, digits)},
                      {"error_bound", bound_string(v.error_bound)},
                      {"bound_kind", integrals::to_string(v.bound_kind)},
                      {"effort", v.effort},
                      {"precision_bits", v.precision_bits}});
  }
  out["values"] = std::move(values);
  json comparisons = json::array();
  for (const auto& c : record.comparisons) {
    comparisons.push_back({{"method_a", c.method_a},
                           {"method_b", c.method_b},
                           {"value_a", format_complex(c.value_a, digits)},
                           {"value_b", format_complex(c.value_b, digits)},
                           {"delta", bound_string(c.delta)},
                           {"bound_sum", bound_string(c.bound_sum)},
                           {"requested_tol", bound_string(c.requested_tol)},
                           {"tolerance", bound_string(c.tolerance)},
                           {"passed", c.passed}});
  }
  out["comparisons"] = std::move(comparisons);
  if (record.divisibility) {
    out["divisibility"] = {{"holds", record.divisibility->holds},
                           {"denominator", record.divisibility->denominator.get_str()},
                           {"bound", record.divisibility->bound.get_str()}};
  } else {
    out["divisibility"] = nullptr;
  }
  out["max_delta"] = bound_string(record.max_delta);
  out["tolerance"] = bound_string(record.tolerance);
  out["passed"] = record.passed;
  out["notes"] = record.notes;
  return out;
}

std::size_t count_passed(const std::vector<VerificationRecord>& records) {
  std::size_t n = 0;
  for (const auto& r : records) n += r.passed ? 1 : 0;
  return n;
}

std::string emit_json(const std::vector<VerificationRecord>& records, const ReportConfig& config) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  json cfg = json::object();
  for (const auto& [key, value] : config.entries) cfg[key] = value;
  cfg["digits"] = config.digits;
  doc["config"] = std::move(cfg);
  const std::size_t passed = count_passed(records);
  doc["summary"] = {{"total", records.size()}, {"passed", passed}, {"failed", records.size() - passed}};
  json list = json::array();
  for (const auto& r : records) list.push_back(record_json(r, config.digits));
  doc["records"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_csv(const std::vector<VerificationRecord>& records, const ReportConfig& config) {
  std::ostringstream os;
  os << "spec,method_a,method_b,value_a,value_b,delta,tolerance,passed\n";
  for (const auto& r : records) {
    const std::string spec = csv_field(integrals::describe(r.spec, spec_digits(config.digits)));
    if (r.comparisons.empty()) {
      // Keep failed records visible even when nothing could be compared.
      os << spec << ",,,,," << bound_string(r.max_delta) << "," << bound_string(r.tolerance) << ","
         << (r.passed ? "true" : "false") << "\n";
      continue;
    }
    for (const auto& c : r.comparisons) {
      os << spec << "," << csv_field(c.method_a) << "," << csv_field(c.method_b) << ","
         << format_complex(c.value_a, config.digits) << "," << format_complex(c.value_b, config.digits) << ","
         << bound_string(c.delta) << "," << bound_string(c.tolerance) << "," << (c.passed ? "true" : "false")
         << "\n";
    }
  }
  return os.str();
}

std::string emit_text(const std::vector<VerificationRecord>& records, const ReportConfig& config) {
  std::ostringstream os;
  for (const auto& [key, value] : config.entries) os << key << ": " << value << "\n";
  const std::size_t passed = count_passed(records);
  os << "records: " << records.size() << "  passed: " << passed << "  failed: " << records.size() - passed
     << "\n";
  for (const auto& r : records) {
    os << "\n" << (r.passed ? "PASS " : "FAIL ") << integrals::describe(r.spec, spec_digits(config.digits)) << "\n";
    if (r.closed_form) {
      os << "  closed form  " << r.closed_form->expression << "\n"
         << "               = " << format_complex(r.closed_form->value, config.digits) << "\n";
    }
    for (const auto& v : r.method_values) {
      os << "  " << integrals::to_string(v.method) << "  " << format_complex(v.value, config.digits)
         << "  +/- " << bound_string(v.error_bound) << " (" << integrals::to_string(v.bound_kind) << ")\n";
    }
    for (const auto& c : r.comparisons) {
      os << "  " << c.method_a << " vs " << c.method_b << ": delta " << bound_string(c.delta) << " <= "
         << bound_string(c.tolerance) << (c.passed ? "  ok" : "  FAILED") << "\n";
    }
    if (r.divisibility) {
      os << "  denominator " << r.divisibility->denominator.get_str() << " | "
         << (r.divisibility->holds ? "divides " : "does not divide ") << r.divisibility->bound.get_str() << "\n";
    }
    if (!r.notes.empty()) os << "  notes: " << r.notes << "\n";
  }
  return os.str();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw UsageError("unknown output format '" + std::string(name) + "' (expected json, csv or text)");
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "json";
}

int digits_for_bits(unsigned bits) {
  return std::max(1, static_cast<int>(std::floor(bits * 0.30102999566398120)));
}

std::string format_complex(const mp::Complex& value, int digits) {
  std::string out = value.re.to_scientific(digits);
  if (value.im.is_zero()) return out;
  const std::string im = value.im.to_scientific(digits);
  if (im.front() != '-') out += "+";
  return out + im + "i";
}

std::string emit(const std::vector<VerificationRecord>& records, const ReportConfig& config, Format format) {
  switch (format) {
    case Format::json: return emit_json(records, config);
    case Format::csv: return emit_csv(records, config);
    case Format::text: return emit_text(records, config);
  }
  return {};
}

std::string report_schema() {
  const json number_string = {{"type", "string"}};
  const json nullable_string = {{"type", json::array({"string", "null"})}};
  const json value_entry = {
      {"type", "object"},
      {"required", json::array({"method", "value", "error_bound", "bound_kind", "effort", "precision_bits"})},
      {"properties",
       {{"method", {{"enum", json::array({"series", "reduce1d", "quad2d"})}}},
        {"value", number_string},
        {"error_bound", number_string},
        {"bound_kind", {{"enum", json::array({"rigorous", "heuristic"})}}},
        {"effort", {{"type", "integer"}, {"minimum", 0}}},
        {"precision_bits", {{"type", "integer"}, {"minimum", 0}}}}}};
  const json comparison = {
      {"type", "object"},
      {"required", json::array({"method_a", "method_b", "value_a", "value_b", "delta", "bound_sum",
                                "requested_tol", "tolerance", "passed"})},
      {"properties",
       {{"method_a", number_string},
        {"method_b", number_string},
        {"value_a", number_string},
        {"value_b", number_string},
        {"delta", number_string},
        {"bound_sum", number_string},
        {"requested_tol", number_string},
        {"tolerance", number_string},
        {"passed", {{"type", "boolean"}}}}}};
  const json record = {
      {"type", "object"},
      {"required", json::array({"spec", "spec_fields", "closed_form", "values", "comparisons", "divisibility",
                                "max_delta", "tolerance", "passed", "notes"})},
      {"properties",
       {{"spec", number_string},
        {"spec_fields",
         {{"type", "object"},
          {"required", json::array({"kind"})},
          {"properties",
           {{"kind", {{"enum", json::array({"monomial", "conjecture"})}}},
            {"r", {{"type", "integer"}, {"minimum", 0}}},
            {"s", {{"type", "integer"}, {"minimum", 0}}},
            {"n", {{"type", "integer"}, {"minimum", 0}}},
            {"z_re", number_string},
            {"z_im", number_string}}}}},
        {"closed_form",
         {{"type", json::array({"object", "null"})},
          {"properties", {{"expression", number_string}, {"value", number_string}, {"error_bound", number_string}}}}},
        {"values", {{"type", "array"}, {"items", value_entry}}},
        {"comparisons", {{"type", "array"}, {"items", comparison}}},
        {"divisibility",
         {{"type", json::array({"object", "null"})},
          {"properties",
           {{"holds", {{"type", "boolean"}}}, {"denominator", number_string}, {"bound", number_string}}}}},
        {"max_delta", number_string},
        {"tolerance", number_string},
        {"passed", {{"type", "boolean"}}},
        {"notes", nullable_string}}}};
  json schema = {
      {"$schema", "https://json-schema.org/draft/2020-12/schema"},
      {"title", "logzeta verification report"},
      {"type", "object"},
      {"required", json::array({"schema_version", "config", "summary", "records"})},
      {"properties",
       {{"schema_version", {{"const", kSchemaVersion}}},
        {"config", {{"type", "object"}}},
        {"summary",
         {{"type", "object"},
          {"required", json::array({"total", "passed", "failed"})},
          {"properties",
           {{"total", {{"type", "integer"}, {"minimum", 0}}},
            {"passed", {{"type", "integer"}, {"minimum", 0}}},
            {"failed", {{"type", "integer"}, {"minimum", 0}}}}}}},
        {"records", {{"type", "array"}, {"items", record}}}}}};
  return schema.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace logzeta::report
