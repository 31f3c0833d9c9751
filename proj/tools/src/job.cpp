#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "slr/cli.hpp"

namespace slr::cli {

namespace {

using nlohmann::json;

constexpr const char* kModule = "cli";

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, kModule, what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) invalid(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) invalid(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(where + ": expected a finite number");
  return x;
}

double number_at(const json& obj, const char* key, const std::string& where) {
  return number(require(obj, key, where), where + "." + key);
}

std::optional<double> optional_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return number(obj.at(key), where + "." + key);
}

std::vector<double> number_array(const json& v, const std::string& where) {
  if (!v.is_array()) invalid(where + ": expected an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::complex<double>> complex_array(const json& v, const std::string& where) {
  if (!v.is_array()) invalid(where + ": expected an array of [re, im] pairs");
  std::vector<std::complex<double>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto pair = number_array(v[i], where + "[" + std::to_string(i) + "]");
    if (pair.size() != 2) invalid(where + ": each entry must be [re, im]");
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) invalid(where + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) invalid(where + ": unknown field \"" + item.key() + "\"");
  }
}

DensityPiece piece_from(const json& p, const std::string& where) {
  const double lo = number_at(p, "lo", where);
  const double hi = number_at(p, "hi", where);
  const auto& kind = require(p, "kind", where);
  if (!kind.is_string()) invalid(where + ".kind: expected a string");
  const auto name = kind.get<std::string>();
  if (name == "power_law") {
    check_keys(p, {"lo", "hi", "kind", "coeff", "exponent"}, where);
    return {lo, hi, PowerLaw{number_at(p, "coeff", where), number_at(p, "exponent", where)}};
  }
  if (name == "inverse_sqrt") {
    check_keys(p, {"lo", "hi", "kind", "coeff"}, where);
    return {lo, hi, InverseSqrt{number_at(p, "coeff", where)}};
  }
  if (name == "table") {
    check_keys(p, {"lo", "hi", "kind", "knots", "values"}, where);
    return {lo, hi,
            Table{number_array(require(p, "knots", where), where + ".knots"),
                  number_array(require(p, "values", where), where + ".values")}};
  }
  invalid(where + ".kind: unknown piece kind \"" + name + "\"");
}

SpectralMeasure measure_from(const json& m) {
  check_keys(m, {"atoms", "pieces", "tail", "infinite_mass"}, "measure");
  std::vector<Atom> atoms;
  if (m.contains("atoms")) {
    const auto& arr = m.at("atoms");
    if (!arr.is_array()) invalid("measure.atoms: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "measure.atoms[" + std::to_string(i) + "]";
      check_keys(arr[i], {"t", "w"}, where);
      atoms.push_back({number_at(arr[i], "t", where), number_at(arr[i], "w", where)});
    }
  }
  std::vector<DensityPiece> pieces;
  if (m.contains("pieces")) {
    const auto& arr = m.at("pieces");
    if (!arr.is_array()) invalid("measure.pieces: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      pieces.push_back(piece_from(arr[i], "measure.pieces[" + std::to_string(i) + "]"));
    }
  }
  std::optional<PowerTail> tail;
  if (m.contains("tail") && !m.at("tail").is_null()) {
    const auto& t = m.at("tail");
    check_keys(t, {"T", "coeff", "exponent"}, "measure.tail");
    const double exponent = number_at(t, "exponent", "measure.tail");
    if (!(exponent < 0.0)) {
      throw Error(ErrorKind::NonIntegrable, kModule, "measure.tail.exponent must be < 0 for a decaying tail");
    }
    tail = PowerTail{number_at(t, "T", "measure.tail"), number_at(t, "coeff", "measure.tail"), -exponent};
  }
  bool infinite_mass = false;
  if (m.contains("infinite_mass")) {
    if (!m.at("infinite_mass").is_boolean()) invalid("measure.infinite_mass: expected a boolean");
    infinite_mass = m.at("infinite_mass").get<bool>();
  }
  return SpectralMeasure(std::move(atoms), std::move(pieces), tail, infinite_mass);
}

HalfLinePotential potential_from(const json& p) {
  check_keys(p, {"a", "q"}, "potential");
  const double a = p.contains("a") ? number(p.at("a"), "potential.a") : 0.0;
  const auto& q = require(p, "q", "potential");
  const auto& kind = require(q, "kind", "potential.q");
  if (!kind.is_string()) invalid("potential.q.kind: expected a string");
  const auto name = kind.get<std::string>();
  if (name == "zero") {
    check_keys(q, {"kind"}, "potential.q");
    return {a, ZeroPotential{}};
  }
  if (name == "constant") {
    check_keys(q, {"kind", "value"}, "potential.q");
    return {a, ConstantPotential{number_at(q, "value", "potential.q")}};
  }
  if (name == "table") {
    check_keys(q, {"kind", "grid", "values", "cutoff", "q_inf"}, "potential.q");
    return {a, TablePotential{number_array(require(q, "grid", "potential.q"), "potential.q.grid"),
                              number_array(require(q, "values", "potential.q"), "potential.q.values"),
                              number_at(q, "cutoff", "potential.q"),
                              optional_number(q, "q_inf", "potential.q").value_or(0.0)}};
  }
  invalid("potential.q.kind: unknown kind \"" + name + "\"");
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Classify: return "classify";
    case Command::Moments: return "moments";
    case Command::Restore: return "restore";
    case Command::Sweep: return "sweep";
    case Command::Verify: return "verify";
    case Command::Weyl: return "weyl";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::Classify, Command::Moments, Command::Restore, Command::Sweep, Command::Verify,
                 Command::Weyl}) {
    if (to_string(c) == name) return c;
  }
  invalid("unknown command \"" + std::string(name) + "\"");
}

SpectralMeasure parse_measure(const std::string& json_text) { return measure_from(parse_text(json_text)); }

HalfLinePotential parse_potential(const std::string& json_text) {
  return potential_from(parse_text(json_text));
}

JobSpec parse_job(const std::string& json_text) {
  const json j = parse_text(json_text);
  check_keys(j, {"command", "measure", "gamma", "gamma_range", "operator", "potential", "output",
                 "tolerances", "lambdas", "samples"},
             "job");
  JobSpec job;
  const auto& cmd = require(j, "command", "job");
  if (!cmd.is_string()) invalid("job.command: expected a string");
  job.command = parse_command(cmd.get<std::string>());

  if (j.contains("measure")) job.measure = measure_from(j.at("measure"));
  if (j.contains("gamma")) job.gamma = number(j.at("gamma"), "job.gamma");
  if (j.contains("gamma_range")) {
    const auto r = number_array(j.at("gamma_range"), "job.gamma_range");
    if (r.size() != 3) invalid("job.gamma_range: expected [lo, hi, n]");
    if (r[2] < 0.0 || r[2] != std::floor(r[2])) invalid("job.gamma_range: n must be a nonnegative integer");
    if (!(r[1] >= r[0])) invalid("job.gamma_range: needs lo <= hi");
    job.gamma_range = GammaRange{r[0], r[1], static_cast<std::size_t>(r[2])};
  }
  if (job.gamma && job.gamma_range) invalid("job: give exactly one of gamma and gamma_range");
  if (j.contains("operator")) {
    const auto& o = j.at("operator");
    check_keys(o, {"theta", "m", "c", "xi"}, "operator");
    job.op = OperatorSpec{optional_number(o, "theta", "operator"), optional_number(o, "m", "operator"),
                          optional_number(o, "c", "operator"), optional_number(o, "xi", "operator")};
  }
  if (j.contains("potential")) job.potential = potential_from(j.at("potential"));
  if (j.contains("output")) {
    const auto& o = j.at("output");
    check_keys(o, {"path", "format"}, "output");
    if (o.contains("path")) {
      if (!o.at("path").is_string()) invalid("output.path: expected a string");
      job.output_path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      const auto& f = o.at("format");
      if (f == "json") job.format = Format::Json;
      else if (f == "csv") job.format = Format::Csv;
      else invalid("output.format: expected \"json\" or \"csv\"");
    }
  }
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    check_keys(t, {"quad_abs", "ode", "verify"}, "tolerances");
    job.tol.quad_abs = optional_number(t, "quad_abs", "tolerances").value_or(job.tol.quad_abs);
    job.tol.ode = optional_number(t, "ode", "tolerances").value_or(job.tol.ode);
    job.tol.verify = optional_number(t, "verify", "tolerances").value_or(job.tol.verify);
    if (!(job.tol.quad_abs > 0.0 && job.tol.ode > 0.0 && job.tol.verify > 0.0)) {
      invalid("tolerances: every tolerance must be > 0");
    }
  }
  if (j.contains("lambdas")) job.lambdas = complex_array(j.at("lambdas"), "job.lambdas");
  if (j.contains("samples")) {
    job.samples = complex_array(j.at("samples"), "job.samples");
    for (const auto& z : job.samples) {
      if (z.imag() == 0.0 && z.real() >= 0.0) invalid("job.samples: points on [0, inf) hit the spectrum");
    }
  }
  return job;
}

JobSpec load_job(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read job file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job(buf.str());
}

int exit_code(const Error& e) { return is_numerical_failure(e.kind()) ? 3 : 2; }

}  // namespace slr::cli
