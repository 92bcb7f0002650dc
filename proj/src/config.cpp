#include "voakit/config.hpp"

#include <cstdlib>
#include <fstream>

#include <omp.h>

#include "voakit/errors.hpp"

namespace voakit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + text + "' for " + key);
  }
}

bool parse_bool(const std::string& text, const std::string& key) {
  if (text == "1" || text == "true" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "no") return false;
  throw UsageError("bad boolean '" + text + "' for " + key);
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(trim(text), "range");
    return {v, v};
  }
  const Range r{parse_int(trim(text.substr(0, dots)), "range"), parse_int(trim(text.substr(dots + 2)), "range")};
  if (r.first > r.second) throw UsageError("empty range '" + text + "'");
  return r;
}

void apply_setting(SuiteConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "suite") {
    cfg.suite = value;
  } else if (key == "voa") {
    try {
      cfg.kind = parse_kind(value);
    } catch (const std::exception&) {
      throw UsageError("unknown voa '" + value + "'");
    }
  } else if (key == "c") {
    try {
      cfg.central_charge = parse_rational(value);
    } catch (const std::exception&) {
      throw UsageError("bad central charge '" + value + "'");
    }
  } else if (key == "cutoff") {
    cfg.cutoff = parse_int(value, key);
  } else if (key == "margin") {
    cfg.margin = parse_int(value, key);
  } else if (key == "margin_ceiling") {
    cfg.margin_ceiling = parse_int(value, key);
  } else if (key == "m") {
    cfg.m_range = parse_range(value);
  } else if (key == "n") {
    cfg.n_range = parse_range(value);
  } else if (key == "p") {
    cfg.p_range = parse_range(value);
  } else if (key == "corpus") {
    cfg.corpus_wt = parse_int(value, key);
  } else if (key == "report") {
    cfg.report_path = value;
  } else if (key == "inject_fail") {
    cfg.inject_fail = parse_bool(value, key);
  } else if (key == "serial") {
    cfg.serial = parse_bool(value, key);
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

void load_config_file(SuiteConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

int configure_threads() {
  if (const char* env = std::getenv("VOAKIT_THREADS")) {
    const int n = parse_int(env, "VOAKIT_THREADS");
    if (n < 1) throw UsageError("VOAKIT_THREADS must be positive");
    omp_set_num_threads(n);
  }
  return omp_get_max_threads();
}

}  // namespace voakit
