#include <sstream>

#include "json.hpp"
#include "slr/cli.hpp"
#include "slr/restore.hpp"
#include "slr/stieltjes.hpp"
#include "slr/system.hpp"

namespace slr::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kModule = "cli";

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, kModule, what);
}

ojson extended(const ExtendedReal& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

template <class T>
ojson maybe(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

const SpectralMeasure& need_measure(const JobSpec& job) {
  if (!job.measure) invalid(std::string(to_string(job.command)) + " job needs \"measure\"");
  return *job.measure;
}

double need_gamma(const JobSpec& job) {
  if (!job.gamma) invalid(std::string(to_string(job.command)) + " job needs a single \"gamma\"");
  return *job.gamma;
}

const HalfLinePotential& need_potential(const JobSpec& job) {
  if (!job.potential) invalid(std::string(to_string(job.command)) + " job needs \"potential\"");
  return *job.potential;
}

Format pick_format(const JobSpec& job, Format fallback, bool csv_allowed) {
  const Format f = job.format.value_or(fallback);
  if (f == Format::Csv && !csv_allowed) {
    invalid(std::string(to_string(job.command)) + " emits JSON only");
  }
  return f;
}

quad::Options quad_options(const JobSpec& job) {
  quad::Options opt;
  opt.abs_tol = job.tol.quad_abs;
  return opt;
}

// Operator scalars: explicit fields win, the potential fills the rest.
OperatorData resolve_operator(const JobSpec& job, const Moments& mom) {
  const OperatorSpec spec = job.op.value_or(OperatorSpec{});
  OperatorData op;
  if (spec.m) {
    op.m = *spec.m;
  } else if (job.potential) {
    op.m = WeylEvaluator(*job.potential, std::nullopt, job.tol.ode).weyl_m_at_minus_zero();
  } else {
    invalid("operator data needs \"operator.m\" or a \"potential\"");
  }
  op.c = spec.c;
  op.xi = spec.xi;
  if (mom.b.is_infinite()) {
    if (!op.xi && !op.c) {
      if (!job.potential) invalid("b = inf needs operator.xi, operator.c or a potential");
      op.c = boundary_trace_constant(*job.potential);
    }
    if (!op.xi) op.xi = mom.i2 / *op.c;
    op.theta = spec.theta.value_or(-op.m);
  } else {
    if (!spec.theta) invalid("finite b needs \"operator.theta\"");
    op.theta = *spec.theta;
  }
  return op;
}

std::string alpha_text(const Sectoriality& s) {
  switch (s.kind) {
    case SectorKind::Sectorial: return format_double(s.alpha);
    case SectorKind::Extremal: return "extremal";
    case SectorKind::NonAccretive: return "none";
  }
  return "none";
}

std::string csv_extended(const ExtendedReal& x) { return x.is_infinite() ? "inf" : format_double(x.value()); }

Artifact run_moments(const JobSpec& job) {
  pick_format(job, Format::Json, false);
  const auto mom = moments(need_measure(job), quad_options(job));
  ojson j;
  j["a"] = mom.a;
  j["b"] = extended(mom.b);
  j["i2"] = mom.i2;
  j["err_a"] = mom.err_a;
  j["err_b"] = mom.err_b;
  j["err_i2"] = mom.err_i2;
  return {dump(j), Format::Json, false};
}

Artifact run_classify(const JobSpec& job) {
  pick_format(job, Format::Json, false);
  const auto& sigma = need_measure(job);
  const double gamma = need_gamma(job);
  const auto opt = quad_options(job);
  const auto tag = classify(sigma, gamma, opt);
  const auto mom = moments(sigma, opt);
  ojson j;
  j["class"] = to_string(tag.kind);
  j["stieltjes"] = tag.stieltjes;
  j["gamma"] = gamma;
  j["b"] = extended(mom.b);
  return {dump(j), Format::Json, false};
}

ojson restore_json(const RestoredSystem& r, const OperatorData& op, const Moments& mom) {
  ojson j;
  j["gamma"] = r.gamma;
  j["h_re"] = r.h.real();
  j["h_im"] = r.h.imag();
  j["mu"] = extended(r.mu);
  j["alpha_rad"] = maybe(r.alpha);
  j["accretive"] = r.flags.accretive;
  j["sectorial"] = r.flags.sectorial;
  j["extremal"] = r.flags.extremal;
  j["class"] = to_string(r.class_tag.kind);
  j["stieltjes"] = r.class_tag.stieltjes;
  j["theta"] = op.theta;
  j["m"] = op.m;
  j["c"] = maybe(op.c);
  j["xi"] = maybe(op.xi);
  j["a"] = mom.a;
  j["b"] = extended(mom.b);
  j["i2"] = mom.i2;
  return j;
}

Artifact run_restore(const JobSpec& job) {
  pick_format(job, Format::Json, false);
  const auto& sigma = need_measure(job);
  const double gamma = need_gamma(job);
  const auto opt = quad_options(job);
  const auto tag = classify(sigma, gamma, opt);
  const auto mom = moments(sigma, opt);
  const auto op = resolve_operator(job, mom);
  const auto r = restore_system(mom, gamma, op, tag);
  return {dump(restore_json(r, op, mom)), Format::Json, false};
}

Artifact run_sweep(const JobSpec& job) {
  const Format f = pick_format(job, Format::Csv, true);
  if (!job.gamma_range) invalid("sweep job needs \"gamma_range\"");
  const auto mom = moments(need_measure(job), quad_options(job));
  const auto op = resolve_operator(job, mom);
  const auto& g = *job.gamma_range;
  const auto rows = sweep(mom.b, op.theta, op.m, op.xi, g.lo, g.hi, g.n);
  if (f == Format::Json) {
    ojson arr = ojson::array();
    for (const auto& r : rows) {
      ojson row;
      row["gamma"] = r.gamma;
      row["h_re"] = r.h.real();
      row["h_im"] = r.h.imag();
      row["mu"] = extended(r.mu);
      if (r.sector.kind == SectorKind::Sectorial) row["alpha_rad"] = r.sector.alpha;
      else row["alpha_rad"] = alpha_text(r.sector);
      row["accretive"] = r.accretive;
      row["circle_residual"] = r.circle_residual;
      row["eta_residual"] = maybe(r.eta_residual);
      arr.push_back(row);
    }
    ojson j;
    j["rows"] = arr;
    return {dump(j), Format::Json, false};
  }
  std::ostringstream out;
  out << "gamma,h_re,h_im,mu,alpha_rad,accretive,circle_residual,eta_residual\n";
  for (const auto& r : rows) {
    out << format_double(r.gamma) << ',' << format_double(r.h.real()) << ',' << format_double(r.h.imag())
        << ',' << csv_extended(r.mu) << ',' << alpha_text(r.sector) << ',' << (r.accretive ? 1 : 0) << ','
        << format_double(r.circle_residual) << ','
        << (r.eta_residual ? format_double(*r.eta_residual) : std::string("none")) << '\n';
  }
  return {out.str(), Format::Csv, false};
}

Artifact run_weyl(const JobSpec& job) {
  const Format f = pick_format(job, Format::Csv, true);
  if (job.lambdas.empty()) invalid("weyl job needs a nonempty \"lambdas\" list");
  const WeylEvaluator ev(need_potential(job), std::nullopt, job.tol.ode);
  std::vector<std::pair<std::complex<double>, WeylValue>> rows;
  for (const auto& lambda : job.lambdas) rows.emplace_back(lambda, ev.weyl_m(lambda));
  if (f == Format::Json) {
    ojson arr = ojson::array();
    for (const auto& [lambda, v] : rows) {
      ojson row;
      row["lambda_re"] = lambda.real();
      row["lambda_im"] = lambda.imag();
      row["m_re"] = v.m.real();
      row["m_im"] = v.m.imag();
      row["err_est"] = v.err_est;
      arr.push_back(row);
    }
    ojson j;
    j["rows"] = arr;
    return {dump(j), Format::Json, false};
  }
  std::ostringstream out;
  out << "lambda_re,lambda_im,m_re,m_im,err_est\n";
  for (const auto& [lambda, v] : rows) {
    out << format_double(lambda.real()) << ',' << format_double(lambda.imag()) << ','
        << format_double(v.m.real()) << ',' << format_double(v.m.imag()) << ',' << format_double(v.err_est)
        << '\n';
  }
  return {out.str(), Format::Csv, false};
}

Artifact run_verify(const JobSpec& job) {
  pick_format(job, Format::Json, false);
  const auto& sigma = need_measure(job);
  const double gamma = need_gamma(job);
  const auto opt = quad_options(job);
  const auto mom = moments(sigma, opt);
  const auto op = resolve_operator(job, mom);
  // the class tag is recomputed inside verify_realization; it may be absent
  ClassTag tag{mom.b.is_infinite() ? ClassKind::SL0K : ClassKind::SL01K, gamma >= 0.0};
  const auto r = restore_system(mom, gamma, op, tag);
  const WeylEvaluator ev(need_potential(job), std::nullopt, job.tol.ode);
  const SystemParams p{r.h, r.mu, weyl_function(ev), op.theta};
  const auto samples = job.samples.empty() ? default_verification_grid() : job.samples;
  const auto report = verify_realization({sigma, gamma}, p, samples, job.tol.verify, opt);

  ojson j;
  j["max_residual"] = report.max_residual;
  j["eta_residual"] = maybe(report.eta_residual);
  ojson arr = ojson::array();
  for (const auto& s : report.samples) {
    ojson row;
    row["z_re"] = s.z.real();
    row["z_im"] = s.z.imag();
    row["V_in"] = {s.v_in.real(), s.v_in.imag()};
    row["V_model"] = {s.v_model.real(), s.v_model.imag()};
    arr.push_back(row);
  }
  j["samples"] = arr;
  j["tolerance"] = report.tolerance;
  if (report.class_tag) j["class"] = to_string(report.class_tag->kind);
  else j["class"] = nullptr;
  j["pass"] = report.pass;
  return {dump(j), Format::Json, !report.pass};
}

}  // namespace

Artifact run(const JobSpec& job) {
  switch (job.command) {
    case Command::Classify: return run_classify(job);
    case Command::Moments: return run_moments(job);
    case Command::Restore: return run_restore(job);
    case Command::Sweep: return run_sweep(job);
    case Command::Verify: return run_verify(job);
    case Command::Weyl: return run_weyl(job);
  }
  invalid("unknown command");
}

}  // namespace slr::cli
