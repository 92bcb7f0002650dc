#include "voakit/echelon.hpp"

#include <algorithm>
#include <map>

namespace voakit {

void row_axpy(SparseRow& r, const Q& c, const SparseRow& x) {
  if (c == 0 || x.empty()) return;
  SparseRow out;
  out.reserve(r.size() + x.size());
  auto a = r.begin();
  auto b = x.begin();
  while (a != r.end() || b != x.end()) {
    if (b == x.end() || (a != r.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == r.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Q v = a->second + c * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  r = std::move(out);
}

Q row_coeff(const SparseRow& r, long col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, long c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : Q(0);
}

SparseRow Echelon::reduce(const SparseRow& r) const {
  bool touches = false;
  for (const auto& e : r)
    if (pivot_of_.count(e.first)) {
      touches = true;
      break;
    }
  if (!touches) return r;
  std::map<long, Q> acc(r.begin(), r.end());
  for (const auto& [col, val] : r) {
    auto it = pivot_of_.find(col);
    if (it == pivot_of_.end()) continue;
    for (const auto& [c2, v2] : rows_[it->second]) {
      Q& slot = acc[c2];
      slot -= val * v2;
    }
  }
  SparseRow out;
  out.reserve(acc.size());
  for (auto& [c, v] : acc)
    if (v != 0) out.emplace_back(c, std::move(v));
  return out;
}

bool Echelon::insert(SparseRow r) {
  r = reduce(r);
  if (r.empty()) return false;
  long lead = r.back().first;
  Q inv = 1 / r.back().second;
  for (auto& e : r) e.second *= inv;
  for (auto& row : rows_) {
    Q c = row_coeff(row, lead);
    if (c != 0) row_axpy(row, -c, r);
  }
  pivot_of_.emplace(lead, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<const SparseRow*> Echelon::sorted_rows() const {
  std::vector<const SparseRow*> out;
  for (const auto& r : rows_) out.push_back(&r);
  std::sort(out.begin(), out.end(),
            [](const SparseRow* a, const SparseRow* b) { return a->back().first < b->back().first; });
  return out;
}

std::vector<long> Echelon::pivots() const {
  std::vector<long> out;
  for (const auto& [c, i] : pivot_of_) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Q>> kernel_of_images(const std::vector<SparseRow>& images) {
  // Image columns sit above the identity block so they are eliminated first.
  const long n = static_cast<long>(images.size());
  Echelon e;
  for (long i = 0; i < n; ++i) {
    SparseRow r;
    r.emplace_back(i, Q(1));
    for (const auto& [c, v] : images[i]) r.emplace_back(n + c, v);
    e.insert(std::move(r));
  }
  std::vector<std::vector<Q>> out;
  for (const SparseRow* row : e.sorted_rows()) {
    if (row->back().first >= n) continue;
    std::vector<Q> k(n);
    for (const auto& [c, v] : *row) k[c] = v;
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace voakit
