#include "voakit/subspace.hpp"

#include <algorithm>
#include <map>

#include "voakit/errors.hpp"

namespace voakit {

Q pair(const DualFunctional& f, const GradedVector& v) {
  if (!v.is_zero() && v.max_weight() > f.cutoff)
    throw TruncationError("pairing needs weight " + std::to_string(v.max_weight()) +
                          " beyond functional cutoff " + std::to_string(f.cutoff));
  Q out = 0;
  auto a = f.coords.begin();
  auto b = v.begin();
  while (a != f.coords.end() && b != v.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      out += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return out;
}

Subspace::Subspace(Grading g, int cutoff) : grading_(std::move(g)), cutoff_(cutoff) {
  if (cutoff > grading_.max_weight())
    throw TruncationError("cutoff " + std::to_string(cutoff) + " exceeds enumerated weights");
  provenance.cutoff = cutoff;
}

SparseRow Subspace::to_row(const GradedVector& v) const {
  SparseRow r;
  r.reserve(v.size());
  for (const auto& [k, c] : v) r.emplace_back(grading_.col(k), c);
  return r;
}

GradedVector Subspace::from_row(const SparseRow& r) const {
  GradedVector v;
  for (const auto& [c, q] : r) v.add(grading_.key(c), q);
  return v;
}

bool Subspace::insert(const GradedVector& v) {
  if (!v.is_zero() && v.max_weight() > cutoff_)
    throw TruncationError("vector of weight " + std::to_string(v.max_weight()) +
                          " outside cutoff " + std::to_string(cutoff_));
  return ech_.insert(to_row(v));
}

bool Subspace::try_insert(const GradedVector& v) {
  if (!v.is_zero() && v.max_weight() > cutoff_) return false;
  ech_.insert(to_row(v));
  return true;
}

Membership Subspace::member(const GradedVector& v) const {
  if (!v.is_zero() && v.max_weight() > cutoff_)
    throw TruncationError("membership query of weight " + std::to_string(v.max_weight()) +
                          " outside cutoff " + std::to_string(cutoff_));
  Membership out;
  SparseRow r = to_row(v);
  if (!ech_.reduce(r).empty()) return out;
  out.member = true;
  for (const SparseRow* row : ech_.sorted_rows()) out.coords.push_back(row_coeff(r, row->back().first));
  return out;
}

GradedVector Subspace::reduce(const GradedVector& v) const {
  if (!v.is_zero() && v.max_weight() > cutoff_)
    throw TruncationError("reduction of weight " + std::to_string(v.max_weight()) +
                          " outside cutoff " + std::to_string(cutoff_));
  return from_row(ech_.reduce(to_row(v)));
}

std::vector<GradedVector> Subspace::rows() const {
  std::vector<GradedVector> out;
  for (const SparseRow* r : ech_.sorted_rows()) out.push_back(from_row(*r));
  return out;
}

Subspace Subspace::restricted(int d) const {
  Subspace out(grading_, std::min(d, cutoff_));
  out.provenance = provenance;
  out.provenance.cutoff = out.cutoff_;
  const long limit = grading_.dim_upto(out.cutoff_);
  for (const SparseRow* r : ech_.sorted_rows())
    if (r->back().first < limit) out.ech_.insert(*r);
  return out;
}

std::vector<BasisKey> Subspace::free_keys() const {
  std::vector<BasisKey> out;
  for (long c = 0; c < grading_.dim_upto(cutoff_); ++c)
    if (!ech_.is_pivot(c)) out.push_back(grading_.key(c));
  return out;
}

std::vector<DualFunctional> Subspace::annihilator() const {
  std::map<long, GradedVector> by_free;
  for (const BasisKey& k : free_keys()) by_free[grading_.col(k)].add(k, 1);
  for (const SparseRow* r : ech_.sorted_rows()) {
    long piv = r->back().first;
    BasisKey pk = grading_.key(piv);
    for (const auto& [c, q] : *r)
      if (c != piv) by_free[c].add(pk, -q);
  }
  std::vector<DualFunctional> out;
  for (auto& [c, v] : by_free) out.push_back(DualFunctional{cutoff_, std::move(v)});
  return out;
}

bool Subspace::contains_subspace(const Subspace& other) const {
  for (const SparseRow* r : other.ech_.sorted_rows())
    if (!contains(other.from_row(*r))) return false;
  return true;
}

Subspace echelonize(const std::vector<GradedVector>& vectors, const Grading& g, int cutoff) {
  Subspace s(g, cutoff);
  for (const auto& v : vectors) s.insert(v);
  s.provenance.generators = static_cast<long>(vectors.size());
  s.provenance.admitted = s.provenance.generators;
  return s;
}

Subspace functional_span(const std::vector<DualFunctional>& fs, const Grading& g, int cutoff) {
  Subspace s(g, cutoff);
  for (const auto& f : fs) s.insert(f.coords);
  s.provenance.family = "functionals";
  return s;
}

std::optional<std::vector<Q>> combination_of(const std::vector<GradedVector>& gens, const GradedVector& v,
                                             const Grading& g, int cutoff) {
  const Subspace ambient(g, cutoff);
  std::vector<SparseRow> images;
  for (const auto& x : gens) images.push_back(ambient.to_row(x));
  images.push_back(ambient.to_row(v));
  const std::size_t k = gens.size();
  for (const auto& kv : kernel_of_images(images)) {
    if (kv[k] == 0) continue;
    std::vector<Q> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = -kv[i] / kv[k];
    return c;
  }
  return std::nullopt;
}

}  // namespace voakit
