#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "voakit/rational.hpp"
#include "voakit/voa.hpp"

namespace voakit {

enum class Verdict { Pass, Fail, Inconclusive };
std::string verdict_name(Verdict v);

using Range = std::pair<int, int>;

// Unset optionals fall back to each suite's registered defaults.
struct SuiteConfig {
  VoaKind kind = VoaKind::FreeBoson;
  Q central_charge = frac(1, 2);
  std::optional<int> cutoff;
  std::optional<int> margin;
  std::optional<Range> m_range;
  std::optional<Range> n_range;
  std::optional<Range> p_range;
  std::optional<int> corpus_wt;
  int margin_ceiling = 10;
  std::string suite = "all";
  std::string report_path;
  bool inject_fail = false;  // flips one expected sign, for harness self-tests
  bool serial = false;
};

struct CheckRecord {
  std::string id;
  std::string anchor;
  Verdict verdict = Verdict::Pass;
  nlohmann::json witness;
  double seconds = 0;
};

struct Report {
  nlohmann::json config;
  std::vector<CheckRecord> records;
  long count(Verdict v) const;
  int exit_code() const;
};

struct SuiteInfo {
  std::string name;
  std::string anchor;
  std::string summary;
};
const std::vector<SuiteInfo>& suite_registry();
bool known_suite(const std::string& name);

// Throws UsageError for an unknown suite or invalid config.
Report run_suite(const SuiteConfig& cfg);
nlohmann::json config_json(const SuiteConfig& cfg);
nlohmann::json report_json(const Report& r);
void emit_report(const Report& r, const std::string& path);

// Retries check(margin) with margin + 2 while it is inconclusive, the margin
// stays within the ceiling and retry() (when given) allows it.
Verdict with_margin_retry(int margin, int ceiling, const std::function<Verdict(int)>& check,
                          int* used = nullptr, const std::function<bool()>& retry = {});

}  // namespace voakit
