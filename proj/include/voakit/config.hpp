#pragma once

#include <string>

#include "voakit/suites.hpp"

namespace voakit {

// "a..b" or a single integer "a".
Range parse_range(const std::string& text);

// Applies one key = value setting; throws UsageError for unknown keys or bad values.
// Keys: suite, voa, c, cutoff, margin, margin_ceiling, m, n, p, corpus, report,
// inject_fail, serial.
void apply_setting(SuiteConfig& cfg, const std::string& key, const std::string& value);

// Flat "key = value" lines; '#' starts a comment.
void load_config_file(SuiteConfig& cfg, const std::string& path);

// Caps OpenMP workers from VOAKIT_THREADS when set. Returns the active cap.
int configure_threads();

}  // namespace voakit
