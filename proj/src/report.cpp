#include "voakit/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "voakit/errors.hpp"
#include "voakit/spans.hpp"
#include "voakit/vacuum.hpp"

namespace voakit {

namespace {

std::string s(long v) { return std::to_string(v); }

long quotient_dim(const VOA& A, const Subspace& span, int D) {
  return A.grading().dim_upto(D) - static_cast<long>(span.restricted(D).rank());
}

}  // namespace

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds = {"omega-dims", "an-upper-bounds", "odagger-ranks", "odiamond-ranks"};
  return kinds;
}

std::string table_columns_help() {
  return "omega-dims: n,cutoff,dim\n"
         "an-upper-bounds: n,cutoff,margin,span_rank,quotient_dim\n"
         "odagger-ranks: m,n,cutoff,margin,span_rank,quotient_dim\n"
         "odiamond-ranks: m,n,cutoff,margin,span_rank,quotient_dim\n"
         "span_rank counts the span inside weights <= cutoff; quotient_dim is the\n"
         "dimension of the weight <= cutoff window minus span_rank, an upper bound\n"
         "for the quotient.\n";
}

Table make_table(const std::string& kind, const SuiteConfig& cfg) {
  if (std::find(table_kinds().begin(), table_kinds().end(), kind) == table_kinds().end())
    throw UsageError("unknown table kind '" + kind + "'");
  const int D = cfg.cutoff.value_or(6);
  const int M = cfg.margin.value_or(4);
  const VOA A(cfg.kind, cfg.central_charge, D + M + 4);
  SpanStore store(A);
  Table t;
  t.kind = kind;
  if (kind == "omega-dims") {
    t.columns = {"n", "cutoff", "dim"};
    const Range nr = cfg.n_range.value_or(Range{0, 2});
    for (int n = nr.first; n <= nr.second; ++n)
      t.rows.push_back({s(n), s(D), s(static_cast<long>(omega_n(A, n, D, D + M).rank()))});
  } else if (kind == "an-upper-bounds") {
    t.columns = {"n", "cutoff", "margin", "span_rank", "quotient_dim"};
    const Range nr = cfg.n_range.value_or(Range{0, 0});
    for (int n = nr.first; n <= nr.second; ++n)
      for (int d = 0; d <= D; ++d) {
        const auto span = store.get({SpanKind::On, 0, n, d, M});
        const long rank = static_cast<long>(span->restricted(d).rank());
        t.rows.push_back({s(n), s(d), s(M), s(rank), s(quotient_dim(A, *span, d))});
      }
  } else {
    const SpanKind sk = kind == "odagger-ranks" ? SpanKind::ODagger : SpanKind::OPrime;
    t.columns = {"m", "n", "cutoff", "margin", "span_rank", "quotient_dim"};
    const Range mr = cfg.m_range.value_or(Range{0, 2});
    const Range nr = cfg.n_range.value_or(Range{0, 2});
    for (int m = mr.first; m <= mr.second; ++m)
      for (int n = nr.first; n <= nr.second; ++n) {
        const auto span = store.get({sk, m, n, D, M});
        const long rank = static_cast<long>(span->restricted(D).rank());
        t.rows.push_back({s(m), s(n), s(D), s(M), s(rank), s(quotient_dim(A, *span, D))});
      }
  }
  return t;
}

std::string Table::to_text() const {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
    os << "\n";
  };
  os << kind << "\n";
  line(columns);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string Table::to_csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace voakit
