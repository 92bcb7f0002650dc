#pragma once

#include <vector>

#include "voakit/graded_vector.hpp"
#include "voakit/voa.hpp"

namespace voakit {

// Reference evaluator for v_k w. Expands Y(v,x) as a nested normally
// ordered product of derivatives of the generating field and applies the
// resulting mode words by commutator pushing. Nothing is cached and the
// engine in VOA is never called; only the basis enumeration is shared.
class BruteForce {
 public:
  explicit BruteForce(const VOA& voa) : voa_(voa) {}

  GradedVector mode(BasisKey v, long k, BasisKey w) const;
  GradedVector mode(const GradedVector& v, long k, const GradedVector& w) const;
  // Generating-field mode r acting on a vector.
  GradedVector gen(long r, const GradedVector& w) const;

 private:
  GradedVector normal_ordered(const Partition& parts, std::size_t i, long q, const GradedVector& w) const;
  GradedVector word(std::vector<long> modes) const;

  const VOA& voa_;
};

}  // namespace voakit
