#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "idcomp.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Verification of idempotent completions of (n+2)-angulated categories"};
  app.require_subcommand(1, 1);
  std::string config_path, report_path;
  idcomp::RunConfig overrides;
  long long budget = -1;
  std::size_t dims = 0;
  int n = 0;
  std::string fixture, format, delta;

  for (const auto& name : idcomp::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--fixture", fixture, "presentation file");
    sub->add_option("--budget", budget, "search budget per case");
    sub->add_option("--dims", dims, "maximum number of summands in batteries");
    sub->add_option("--n", n, "override n");
    sub->add_option("--report", report_path, "also write the report to this file");
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--delta", delta, "extension X[:e]/Y[:e]/coords for complete");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    idcomp::RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw idcomp::UsageError("cannot open " + config_path);
      std::stringstream ss;
      ss << in.rdbuf();
      cfg = idcomp::read_config(ss.str());
    }
    if (!fixture.empty()) cfg.fixture = fixture;
    if (budget >= 0) cfg.budget = budget;
    if (dims != 0) cfg.dims = dims;
    if (n != 0) cfg.n = n;
    if (!format.empty()) cfg.format = format;
    if (!delta.empty()) cfg.delta = delta;

    auto report = idcomp::run(command, cfg);
    auto text = idcomp::render(report, cfg.format);
    std::cout << text;
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) throw idcomp::UsageError("cannot write " + report_path);
      out << text;
    }
    return report.exit_code();
  } catch (const idcomp::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const idcomp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const idcomp::PresentationError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const idcomp::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
  }
  return 3;
}
