#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "voakit/rational.hpp"

namespace voakit {

// Position of a basis vector: weight piece, then index inside that piece.
struct BasisKey {
  int wt = 0;
  int idx = 0;
  auto operator<=>(const BasisKey&) const = default;
};

// Finitely supported vector in a graded space with PBW-indexed pieces.
class GradedVector {
 public:
  using Terms = std::map<BasisKey, Q>;

  GradedVector() = default;
  explicit GradedVector(BasisKey k, const Q& c = 1) { add(k, c); }

  void add(BasisKey k, const Q& c);
  GradedVector& axpy(const Q& c, const GradedVector& x);
  GradedVector& operator+=(const GradedVector& x) { return axpy(1, x); }
  GradedVector& operator-=(const GradedVector& x) { return axpy(-1, x); }
  GradedVector& operator*=(const Q& c);

  bool is_zero() const { return terms_.empty(); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Q coeff(BasisKey k) const;
  int min_weight() const;
  int max_weight() const;
  bool homogeneous() const { return is_zero() || min_weight() == max_weight(); }

  GradedVector part(int wt) const;
  std::map<int, GradedVector> parts() const;
  GradedVector truncated(int max_wt) const;

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const GradedVector&) const = default;

 private:
  Terms terms_;
};

GradedVector operator+(GradedVector a, const GradedVector& b);
GradedVector operator-(GradedVector a, const GradedVector& b);
GradedVector operator*(const Q& c, GradedVector a);

// Dimensions of the weight pieces; maps keys to dense column numbers.
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::vector<int> dims);

  int max_weight() const { return static_cast<int>(dims_.size()) - 1; }
  int dim(int wt) const { return (wt < 0 || wt > max_weight()) ? 0 : dims_[wt]; }
  long dim_upto(int wt) const;
  long col(BasisKey k) const { return offsets_[k.wt] + k.idx; }
  BasisKey key(long col) const;
  std::vector<BasisKey> keys_upto(int wt) const;

 private:
  std::vector<int> dims_;
  std::vector<long> offsets_;
};

}  // namespace voakit
