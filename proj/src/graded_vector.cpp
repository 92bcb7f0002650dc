#include "voakit/graded_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace voakit {

void GradedVector::add(BasisKey k, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GradedVector& GradedVector::axpy(const Q& c, const GradedVector& x) {
  if (c == 0) return *this;
  if (this == &x) return *this *= (c + 1);
  for (const auto& [k, v] : x.terms_) add(k, c * v);
  return *this;
}

GradedVector& GradedVector::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Q GradedVector::coeff(BasisKey k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Q(0) : it->second;
}

int GradedVector::min_weight() const {
  if (terms_.empty()) throw std::logic_error("weight of zero vector");
  return terms_.begin()->first.wt;
}

int GradedVector::max_weight() const {
  if (terms_.empty()) throw std::logic_error("weight of zero vector");
  return terms_.rbegin()->first.wt;
}

GradedVector GradedVector::part(int wt) const {
  GradedVector out;
  auto lo = terms_.lower_bound(BasisKey{wt, 0});
  auto hi = terms_.lower_bound(BasisKey{wt + 1, 0});
  out.terms_.insert(lo, hi);
  return out;
}

std::map<int, GradedVector> GradedVector::parts() const {
  std::map<int, GradedVector> out;
  for (const auto& [k, v] : terms_) out[k.wt].terms_.emplace_hint(out[k.wt].terms_.end(), k, v);
  return out;
}

GradedVector GradedVector::truncated(int max_wt) const {
  GradedVector out;
  out.terms_.insert(terms_.begin(), terms_.lower_bound(BasisKey{max_wt + 1, 0}));
  return out;
}

GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
GradedVector operator*(const Q& c, GradedVector a) { return a *= c; }

Grading::Grading(std::vector<int> dims) : dims_(std::move(dims)) {
  offsets_.resize(dims_.size() + 1, 0);
  for (std::size_t i = 0; i < dims_.size(); ++i) offsets_[i + 1] = offsets_[i] + dims_[i];
}

long Grading::dim_upto(int wt) const {
  if (wt < 0) return 0;
  return offsets_[std::min(wt, max_weight()) + 1];
}

BasisKey Grading::key(long col) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), col);
  int wt = static_cast<int>(it - offsets_.begin()) - 1;
  return BasisKey{wt, static_cast<int>(col - offsets_[wt])};
}

std::vector<BasisKey> Grading::keys_upto(int wt) const {
  std::vector<BasisKey> out;
  for (int d = 0; d <= std::min(wt, max_weight()); ++d)
    for (int i = 0; i < dims_[d]; ++i) out.push_back(BasisKey{d, i});
  return out;
}

}  // namespace voakit
