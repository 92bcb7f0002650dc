#pragma once

#include <string>
#include <vector>

#include "voakit/suites.hpp"

namespace voakit {

struct Table {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string to_text() const;
  std::string to_csv() const;
};

// kind: omega-dims, an-upper-bounds, odagger-ranks or odiamond-ranks.
Table make_table(const std::string& kind, const SuiteConfig& cfg);
const std::vector<std::string>& table_kinds();
// One line per kind describing its CSV columns.
std::string table_columns_help();

}  // namespace voakit
