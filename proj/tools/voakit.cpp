#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "voakit/config.hpp"
#include "voakit/errors.hpp"
#include "voakit/expr.hpp"
#include "voakit/report.hpp"
#include "voakit/suites.hpp"

using namespace voakit;

namespace {

constexpr int kUsage = 3;

// Options shared by verify and table; unset ones leave the config file values alone.
struct Common {
  std::string config_path;
  std::map<std::string, std::string> overrides;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "key = value config file, applied before the flags");
    for (const auto& [flag, key, help] : std::vector<std::tuple<std::string, std::string, std::string>>{
             {"--voa", "voa", "heisenberg or virasoro"},
             {"--c", "c", "central charge p/q (virasoro)"},
             {"--cutoff", "cutoff", "weight cutoff D"},
             {"--margin", "margin", "generator margin M"},
             {"--margin-ceiling", "margin_ceiling", "largest margin tried by retries"},
             {"--m", "m", "range a..b"},
             {"--n", "n", "range a..b"},
             {"--p", "p", "range a..b"},
             {"--corpus", "corpus", "corpus weight bound"}}) {
      const std::string k = key;
      app->add_option_function<std::string>(flag, [this, k](const std::string& v) { overrides[k] = v; }, help);
    }
  }

  SuiteConfig build() const {
    SuiteConfig cfg;
    if (!config_path.empty()) load_config_file(cfg, config_path);
    for (const auto& [k, v] : overrides) apply_setting(cfg, k, v);
    return cfg;
  }
};

int run_verify(const Common& common, const std::string& suite, const std::string& report, bool inject, bool serial) {
  SuiteConfig cfg = common.build();
  if (!suite.empty()) cfg.suite = suite;
  if (!report.empty()) cfg.report_path = report;
  if (inject) cfg.inject_fail = true;
  if (serial) cfg.serial = true;
  const Report rep = run_suite(cfg);
  for (const CheckRecord& r : rep.records) {
    std::printf("%-24s %-70s checked=%ld  %.2fs\n", verdict_name(r.verdict).c_str(), r.id.c_str(),
                r.witness.value("checked", 0L), r.seconds);
    if (r.verdict != Verdict::Pass) std::printf("    witness: %s\n", r.witness.dump().c_str());
  }
  std::printf("summary: %zu checks, %ld pass, %ld fail, %ld inconclusive\n", rep.records.size(),
              rep.count(Verdict::Pass), rep.count(Verdict::Fail), rep.count(Verdict::Inconclusive));
  if (!cfg.report_path.empty()) emit_report(rep, cfg.report_path);
  return rep.exit_code();
}

int run_table(const Common& common, const std::string& kind, const std::string& csv) {
  const Table t = make_table(kind, common.build());
  if (csv == "-") {
    std::cout << t.to_csv();
    return 0;
  }
  std::cout << t.to_text();
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw std::runtime_error("cannot write " + csv);
    f << t.to_csv();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voakit: exact computations with Zhu-type products and bimodules of vertex operator algebras"};
  app.require_subcommand(1);

  Common verify_common, table_common;
  std::string suite, report, kind, csv, expr, compute_voa = "heisenberg", compute_c = "1/2";
  int compute_cutoff = 16;
  bool inject = false, serial = false;

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify_common.attach(verify);
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--report", report, "write a JSON report to this path");
  verify->add_flag("--inject-fail", inject, "flip one expected sign to exercise the FAIL path");
  verify->add_flag("--serial", serial, "evaluate span generators serially");
  std::string suites_help = "suites:\n";
  for (const SuiteInfo& s : suite_registry()) suites_help += "  " + s.name + ": " + s.summary + "\n";
  verify->footer(suites_help + "exit codes: 0 pass, 1 fail, 2 inconclusive only, 3 usage error");

  auto* table = app.add_subcommand("table", "print dimension and rank tables");
  table_common.attach(table);
  table->add_option("--kind", kind, "omega-dims, an-upper-bounds, odagger-ranks, odiamond-ranks")->required();
  table->add_option("--csv", csv, "also write the table as CSV to this path; - prints CSV only");
  table->footer("CSV columns:\n" + table_columns_help());

  auto* compute = app.add_subcommand("compute", "evaluate one expression");
  compute->add_option("expr", expr, "expression, e.g. \"star 0 h h\"")->required();
  compute->add_option("--voa", compute_voa, "heisenberg or virasoro");
  compute->add_option("--c", compute_c, "central charge p/q (virasoro)");
  compute->add_option("--cutoff", compute_cutoff, "largest weight kept");
  compute->footer(expression_help());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    configure_threads();
    if (*verify) return run_verify(verify_common, suite, report, inject, serial);
    if (*table) return run_table(table_common, kind, csv);
    SuiteConfig cfg;
    apply_setting(cfg, "voa", compute_voa);
    apply_setting(cfg, "c", compute_c);
    const VOA A(cfg.kind, cfg.central_charge, compute_cutoff);
    std::cout << A.format(evaluate_expression(A, expr)) << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const TruncationError& e) {
    std::cerr << "outside the weight window: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
