#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "slr/error.hpp"
#include "slr/extended_real.hpp"
#include "slr/measure.hpp"
#include "slr/weyl.hpp"

namespace slr::cli {

enum class Command { Classify, Moments, Restore, Sweep, Verify, Weyl };
enum class Format { Json, Csv };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);

struct GammaRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
};

/// Explicit operator scalars; any field may be left for the potential to fill.
struct OperatorSpec {
  std::optional<double> theta;
  std::optional<double> m;
  std::optional<double> c;
  std::optional<double> xi;
};

struct Tolerances {
  double quad_abs = 1e-10;
  double ode = 1e-9;
  double verify = 1e-6;
};

struct JobSpec {
  Command command = Command::Restore;
  std::optional<SpectralMeasure> measure;
  std::optional<double> gamma;
  std::optional<GammaRange> gamma_range;
  std::optional<OperatorSpec> op;
  std::optional<HalfLinePotential> potential;
  std::optional<Format> format;
  std::optional<std::string> output_path;
  Tolerances tol;
  std::vector<std::complex<double>> lambdas;
  std::vector<std::complex<double>> samples;
};

/// JSON readers for the job schema. Every failure is an Error of kind
/// InvalidArgument (or the measure/potential validation kinds).
SpectralMeasure parse_measure(const std::string& json_text);
HalfLinePotential parse_potential(const std::string& json_text);
JobSpec parse_job(const std::string& json_text);
JobSpec load_job(const std::filesystem::path& path);

struct Artifact {
  std::string content;
  Format format = Format::Json;
  bool verification_failed = false;
};

/// Runs the job's pipeline and renders its report. Pure: no files touched.
Artifact run(const JobSpec& job);

/// 2 for validation errors, 3 for numerical failures.
int exit_code(const Error& e);

// Readers for the emitted artifacts.

struct RestoreReport {
  double gamma = 0.0;
  std::complex<double> h;
  ExtendedReal mu;
  std::optional<double> alpha;
  bool accretive = false;
  bool sectorial = false;
  bool extremal = false;
  std::string class_name;
  bool stieltjes = false;
  double theta = 0.0;
  double m = 0.0;
  std::optional<double> c;
  std::optional<double> xi;
  double a = 0.0;
  ExtendedReal b;
  double i2 = 0.0;
};

struct MomentsReport {
  double a = 0.0;
  ExtendedReal b;
  double i2 = 0.0;
  double err_a = 0.0;
  double err_b = 0.0;
  double err_i2 = 0.0;
};

struct ClassifyReport {
  std::string class_name;
  bool stieltjes = false;
  double gamma = 0.0;
  ExtendedReal b;
};

struct VerificationDoc {
  double max_residual = 0.0;
  std::optional<double> eta_residual;
  struct Sample {
    std::complex<double> z;
    std::complex<double> v_in;
    std::complex<double> v_model;
  };
  std::vector<Sample> samples;
  double tolerance = 0.0;
  std::optional<std::string> class_name;
  bool pass = false;
};

struct SweepCsvRow {
  double gamma = 0.0;
  std::complex<double> h;
  ExtendedReal mu;
  std::string alpha;  ///< number, "extremal" or "none"
  bool accretive = false;
  double circle_residual = 0.0;
  std::optional<double> eta_residual;
};

struct MTableRow {
  std::complex<double> lambda;
  std::complex<double> m;
  double err_est = 0.0;
};

RestoreReport read_restore_report(const std::string& json_text);
MomentsReport read_moments_report(const std::string& json_text);
ClassifyReport read_classify_report(const std::string& json_text);
VerificationDoc read_verification_report(const std::string& json_text);
std::vector<SweepCsvRow> read_sweep_csv(const std::string& csv_text);
std::vector<MTableRow> read_m_table_csv(const std::string& csv_text);

}  // namespace slr::cli
