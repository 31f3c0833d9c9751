#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "slr/cli.hpp"

namespace {

struct Flags {
  std::string job;
  std::string out;
  bool quiet = false;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw slr::Error(slr::ErrorKind::InvalidArgument, "cli", "cannot write " + path.string());
  out << content;
  if (!out.flush()) throw slr::Error(slr::ErrorKind::InvalidArgument, "cli", "write failed for " + path.string());
}

int execute(const std::string& subcommand, const Flags& flags) {
  try {
    const auto job = slr::cli::load_job(flags.job);
    if (slr::cli::to_string(job.command) != subcommand) {
      throw slr::Error(slr::ErrorKind::InvalidArgument, "cli",
                       "job command \"" + std::string(slr::cli::to_string(job.command)) +
                           "\" does not match subcommand \"" + subcommand + "\"");
    }
    const auto artifact = slr::cli::run(job);
    const std::string target = !flags.out.empty() ? flags.out : job.output_path.value_or("");
    if (target.empty()) {
      std::cout << artifact.content;
    } else {
      write_file(target, artifact.content);
      if (!flags.quiet) std::cerr << subcommand << ": wrote " << target << "\n";
    }
    if (artifact.verification_failed) {
      std::cerr << "[system] verification failed: residual above tolerance\n";
      return 4;
    }
    return 0;
  } catch (const slr::Error& e) {
    std::cerr << e.what() << "\n";
    return slr::cli::exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "[cli] " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restore rigged canonical systems from Stieltjes-like functions"};
  app.require_subcommand(1);
  Flags flags;
  for (const char* name : {"classify", "moments", "restore", "sweep", "verify", "weyl"}) {
    auto* sub = app.add_subcommand(name, std::string("run a ") + name + " job");
    sub->add_option("--job", flags.job, "job specification (JSON)")->required();
    sub->add_option("--out", flags.out, "output path (defaults to the job's output.path, then stdout)");
    sub->add_flag("--quiet", flags.quiet, "suppress progress messages");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return execute(app.get_subcommands().front()->get_name(), flags);
}
