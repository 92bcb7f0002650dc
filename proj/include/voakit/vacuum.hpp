#pragma once

#include <vector>

#include "voakit/spans.hpp"
#include "voakit/subspace.hpp"
#include "voakit/voa.hpp"

namespace voakit {

// Vectors w of weight <= D with x^n Y(x^{L(0)}v, x) w regular for every basis
// v of weight <= vbound. A nonzero z0 uses the deformed vertex operator.
Subspace omega_n(const VOA& A, int n, int D, int vbound, const Q& z0 = 0);

// Span of the pullbacks of the negative-power coefficients of
// x^{wt v+n}(x+1)^{wt v+m} Y*(v,x), admitted when they fit in D + margin.
Subspace criterion_span(const VOA& A, int m, int n, int D, int margin);

struct VacuumComparison {
  Subspace by_dagger;     // dagger span cut to weights <= D
  Subspace by_criterion;  // criterion span cut to weights <= D
  std::vector<DualFunctional> annihilator;  // functionals killing the dagger span
  std::vector<DualFunctional> kernel;       // functionals satisfying the criterion
  bool equal = false;
};

// Level-(m,n) vacuum space of the dual computed two independent ways.
VacuumComparison vacuum_space_mn(const VOA& A, SpanStore& store, int m, int n, int D, int margin);

// Span whose annihilator is the eigenspace of L_r - L_l for eigenvalue n - m
// inside the (m,n) vacuum space; the pullbacks come from the dual side only.
Subspace eigen_span(const VOA& A, SpanStore& store, int m, int n, int D, int margin);

// Graded pieces of the filtration by the omega_n spaces.
struct GradedPieces {
  std::vector<Subspace> chain;  // omega_0 ... omega_N
  std::vector<long> piece_dims;
};
GradedPieces associated_graded(const VOA& A, int N, int D, int vbound);

}  // namespace voakit
