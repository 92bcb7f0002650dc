#pragma once

#include "voakit/graded_vector.hpp"
#include "voakit/voa.hpp"

namespace voakit {

// Sum_j C(a,j) lambda^j u_{s+j} w for homogeneous u. This is
// Res_x x^s (1 + lambda x)^a Y(u,x) w; the sum is finite by grading.
GradedVector res_sum(const VOA& A, const GradedVector& u, long a, long s, const GradedVector& w,
                     const Q& lambda = 1);

// Products on V x W (W = V here). Inhomogeneous left arguments are split
// into weight pieces, each scaled by its own (1+z)^{wt}.
GradedVector star_n(const VOA& A, const GradedVector& v, const GradedVector& w, int n);
GradedVector circ_n(const VOA& A, const GradedVector& v, const GradedVector& w, int n);
GradedVector dot_action(const VOA& A, const GradedVector& v, const GradedVector& w);
GradedVector circ_mn(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n);
// Res_z (1+z)^{wt v+m+s} z^{-(m+n+2+k)} Y(v,z) w, requires s <= k.
GradedVector o_dagger_general(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n,
                              int s, int k);
// Left product with lower pair (m,n).
GradedVector bar_star_lower(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n);
// Left product with upper index n.
GradedVector bar_star_upper(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n);
// Degree-shifted product v[p] with parameters (m,n).
GradedVector bracket_star(const VOA& A, const GradedVector& v, long p, const GradedVector& w, int m, int n);
// Res_x (1+x)^{wt v - 1} Y(v,x) w.
GradedVector lr_correction(const VOA& A, const GradedVector& v, const GradedVector& w);
// Res_x x^{wt v-1}(1-z0 x)^{wt v-1} Y(e^{-z0(1-z0x)^{-1}L(1)}v, x) w.
GradedVector bullet_z0(const VOA& A, const GradedVector& v, const GradedVector& w, const Q& z0);
// Res_x x^k Y^{[z0]}(v,x) w through the degree-zero formula.
GradedVector deformed_mode(const VOA& A, const GradedVector& v, long k, const GradedVector& w, const Q& z0);
// (L(-1) + L(0) + shift) w.
GradedVector shifted_translation(const VOA& A, const GradedVector& w, long shift);

}  // namespace voakit
