#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "slr/cli.hpp"

namespace slr::cli {

namespace {

using nlohmann::json;

constexpr const char* kModule = "cli";

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, kModule, "report: " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

double num(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number()) bad(std::string("\"") + key + "\" is not a number");
  return v.get<double>();
}

std::optional<double> opt_num(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) bad(std::string("\"") + key + "\" is not a number or null");
  return v.get<double>();
}

bool flag(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_boolean()) bad(std::string("\"") + key + "\" is not a boolean");
  return v.get<bool>();
}

std::string text(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) bad(std::string("\"") + key + "\" is not a string");
  return v.get<std::string>();
}

ExtendedReal ext(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (v.is_string() && v.get<std::string>() == "inf") return ExtendedReal::infinity();
  if (!v.is_number()) bad(std::string("\"") + key + "\" is neither a number nor \"inf\"");
  return v.get<double>();
}

std::complex<double> pair(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    bad(std::string("\"") + key + "\" is not a [re, im] pair");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad("bad CSV number \"" + s + "\"");
  return v;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& csv, const std::string& header) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != header) bad("unexpected CSV header");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

RestoreReport read_restore_report(const std::string& json_text) {
  const auto j = parse_text(json_text);
  RestoreReport r;
  r.gamma = num(j, "gamma");
  r.h = {num(j, "h_re"), num(j, "h_im")};
  r.mu = ext(j, "mu");
  r.alpha = opt_num(j, "alpha_rad");
  r.accretive = flag(j, "accretive");
  r.sectorial = flag(j, "sectorial");
  r.extremal = flag(j, "extremal");
  r.class_name = text(j, "class");
  r.stieltjes = flag(j, "stieltjes");
  r.theta = num(j, "theta");
  r.m = num(j, "m");
  r.c = opt_num(j, "c");
  r.xi = opt_num(j, "xi");
  r.a = num(j, "a");
  r.b = ext(j, "b");
  r.i2 = num(j, "i2");
  return r;
}

MomentsReport read_moments_report(const std::string& json_text) {
  const auto j = parse_text(json_text);
  return {num(j, "a"), ext(j, "b"), num(j, "i2"), num(j, "err_a"), num(j, "err_b"), num(j, "err_i2")};
}

ClassifyReport read_classify_report(const std::string& json_text) {
  const auto j = parse_text(json_text);
  return {text(j, "class"), flag(j, "stieltjes"), num(j, "gamma"), ext(j, "b")};
}

VerificationDoc read_verification_report(const std::string& json_text) {
  const auto j = parse_text(json_text);
  VerificationDoc d;
  d.max_residual = num(j, "max_residual");
  d.eta_residual = opt_num(j, "eta_residual");
  const auto& samples = field(j, "samples");
  if (!samples.is_array()) bad("\"samples\" is not an array");
  for (const auto& s : samples) {
    d.samples.push_back({{num(s, "z_re"), num(s, "z_im")}, pair(s, "V_in"), pair(s, "V_model")});
  }
  d.tolerance = num(j, "tolerance");
  if (!field(j, "class").is_null()) d.class_name = text(j, "class");
  d.pass = flag(j, "pass");
  return d;
}

std::vector<SweepCsvRow> read_sweep_csv(const std::string& csv_text) {
  std::vector<SweepCsvRow> out;
  for (const auto& c : csv_rows(csv_text, "gamma,h_re,h_im,mu,alpha_rad,accretive,circle_residual,eta_residual")) {
    if (c.size() != 8) bad("sweep row has the wrong number of columns");
    SweepCsvRow r;
    r.gamma = parse_double(c[0]);
    r.h = {parse_double(c[1]), parse_double(c[2])};
    r.mu = c[3] == "inf" ? ExtendedReal::infinity() : ExtendedReal(parse_double(c[3]));
    r.alpha = c[4];
    if (r.alpha != "extremal" && r.alpha != "none") parse_double(r.alpha);
    if (c[5] != "0" && c[5] != "1") bad("accretive column must be 0 or 1");
    r.accretive = c[5] == "1";
    r.circle_residual = parse_double(c[6]);
    if (c[7] != "none") r.eta_residual = parse_double(c[7]);
    out.push_back(r);
  }
  return out;
}

std::vector<MTableRow> read_m_table_csv(const std::string& csv_text) {
  std::vector<MTableRow> out;
  for (const auto& c : csv_rows(csv_text, "lambda_re,lambda_im,m_re,m_im,err_est")) {
    if (c.size() != 5) bad("m-table row has the wrong number of columns");
    out.push_back({{parse_double(c[0]), parse_double(c[1])},
                   {parse_double(c[2]), parse_double(c[3])},
                   parse_double(c[4])});
  }
  return out;
}

}  // namespace slr::cli
