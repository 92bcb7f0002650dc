#pragma once

#include <utility>

#include "voakit/graded_vector.hpp"
#include "voakit/voa.hpp"

namespace voakit {

// Dual-side operators are described by pullbacks: for an operator X on the
// graded dual and a vector w, the returned vector P satisfies
// <X f, w> = <f, P>. All of them are derived from the contragredient
// vertex operator Y*; none use the products on V x W. Arguments v are
// homogeneous; (m, n) is the vacuum level of the functional f.

// Coefficient of x^e in Y*(v,x).
GradedVector ystar_coeff(const VOA& A, const GradedVector& v, long e, const GradedVector& w);

// Coefficient of x^t in x^{wt v + n}(x+1)^{wt v + m} Y*(v,x).
GradedVector regular_coeff(const VOA& A, const GradedVector& v, long t, const GradedVector& w, int m, int n);

// Largest weight that regular_coeff(v, t, w) can reach.
long regular_coeff_reach(long wt_v, long t, long wt_w, int m, int n);

// Coefficients of Y^R(v,x) and Y^L(v,x) on the (m,n) vacuum space.
GradedVector yr_coeff(const VOA& A, const GradedVector& v, long e, const GradedVector& w, int m, int n);
GradedVector yl_coeff(const VOA& A, const GradedVector& v, long e, const GradedVector& w, int m, int n);

// Left and right bimodule actions on the dual.
GradedVector bullet_left(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n);
GradedVector bullet_right(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n);

// Res_x x^{wt v-1+p}(1+x)^{wt v-1-p} Y^R(e^{(1+x)^{-1}L(1)}v, x).
GradedVector yr_shifted_mode(const VOA& A, const GradedVector& v, long p, const GradedVector& w, int m, int n);

// Coefficient of x^t in Y^R(e^{(1-x)L(1)}(1-x)^{-2L(0)}v, x/(1-x)), by substitution.
GradedVector yr_deformed_coeff(const VOA& A, const GradedVector& v, long t, const GradedVector& w, int m,
                               int n);

// Zero modes of the two deformed conformal actions: (left, right).
std::pair<GradedVector, GradedVector> lr_zero_modes(const VOA& A, const GradedVector& w, int m, int n);

}  // namespace voakit
