#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voakit/echelon.hpp"
#include "voakit/graded_vector.hpp"

namespace voakit {

// Coordinates in the dual basis of each weight piece up to the cutoff.
struct DualFunctional {
  int cutoff = 0;
  GradedVector coords;
};

// Throws TruncationError when v has support above f.cutoff.
Q pair(const DualFunctional& f, const GradedVector& v);

struct Provenance {
  std::string family = "explicit";
  int m = 0;
  int n = 0;
  int cutoff = 0;
  int margin = 0;
  long generators = 0;
  long admitted = 0;
};

struct Membership {
  bool member = false;
  std::vector<Q> coords;  // against rows() when member
};

// Span inside the weight-<=cutoff truncation of a graded space, kept in
// reduced echelon form with the highest (weight, index) entry as pivot.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Grading g, int cutoff);

  // Throws TruncationError for support above the cutoff.
  bool insert(const GradedVector& v);
  // Inserts v if its support fits; returns false and leaves the span alone otherwise.
  bool try_insert(const GradedVector& v);

  Membership member(const GradedVector& v) const;
  bool contains(const GradedVector& v) const { return member(v).member; }
  // Canonical representative of v modulo the span.
  GradedVector reduce(const GradedVector& v) const;

  std::size_t rank() const { return ech_.rank(); }
  int cutoff() const { return cutoff_; }
  const Grading& grading() const { return grading_; }
  // Rows ordered by pivot, lowest weight first.
  std::vector<GradedVector> rows() const;
  // Intersection with the weight-<=d truncation.
  Subspace restricted(int d) const;
  // Basis of the functionals on weights <= cutoff vanishing on the span.
  std::vector<DualFunctional> annihilator() const;
  // Basis keys not used as pivots: a basis of the quotient.
  std::vector<BasisKey> free_keys() const;
  bool contains_subspace(const Subspace& other) const;

  Provenance provenance;

  SparseRow to_row(const GradedVector& v) const;
  GradedVector from_row(const SparseRow& r) const;

 private:
  Grading grading_;
  int cutoff_ = 0;
  Echelon ech_;
};

Subspace echelonize(const std::vector<GradedVector>& vectors, const Grading& g, int cutoff);

// Coefficients c with sum c_i gens_i = v, or nullopt when v is not in their
// span. Dependent generators give one fixed solution among many.
std::optional<std::vector<Q>> combination_of(const std::vector<GradedVector>& gens, const GradedVector& v,
                                             const Grading& g, int cutoff);
// Span of functionals, compared through their coordinate vectors.
Subspace functional_span(const std::vector<DualFunctional>& fs, const Grading& g, int cutoff);

}  // namespace voakit
