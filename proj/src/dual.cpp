#include "voakit/dual.hpp"

#include <stdexcept>

namespace voakit {

namespace {

long weight_of(const GradedVector& v) {
  if (v.is_zero()) return 0;
  if (!v.homogeneous()) throw std::invalid_argument("dual-side operators need homogeneous v");
  return v.max_weight();
}

long top_weight(const GradedVector& w) { return w.is_zero() ? -1 : w.max_weight(); }

}  // namespace

GradedVector ystar_coeff(const VOA& A, const GradedVector& v, long e, const GradedVector& w) {
  // <Y*(v,x)f, w> = <f, Y(e^{xL(1)}(-x^{-2})^{L(0)}v, x^{-1})w>
  GradedVector out;
  if (v.is_zero() || w.is_zero()) return out;
  const long wt = weight_of(v);
  const int sign = sign_pow(wt);
  long r = 0;
  for (const auto& ur : A.L1_powers(v)) {
    out.axpy(Q(sign), A.mode(ur, e + 2 * wt - r - 1, w));
    ++r;
  }
  return out;
}

long regular_coeff_reach(long wt_v, long t, long wt_w, int m, int n) { return wt_w - t + n + wt_v + m; }

GradedVector regular_coeff(const VOA& A, const GradedVector& v, long t, const GradedVector& w, int m, int n) {
  GradedVector out;
  if (v.is_zero()) return out;
  const long wt = weight_of(v);
  for (long j = 0; j <= wt + m; ++j) out.axpy(binom_q(wt + m, j), ystar_coeff(A, v, t - wt - n - j, w));
  return out;
}

GradedVector yr_coeff(const VOA& A, const GradedVector& v, long e, const GradedVector& w, int m, int n) {
  GradedVector out;
  if (v.is_zero()) return out;
  const long wt = weight_of(v);
  const long top = e + wt + n;
  for (long i = 0; i <= top; ++i) out.axpy(binom_q(-wt - m, i), regular_coeff(A, v, top - i, w, m, n));
  return out;
}

GradedVector yl_coeff(const VOA& A, const GradedVector& v, long e, const GradedVector& w, int m, int n) {
  // (-1+x)^{wt v+n} x^{wt v+m} Y^L(v,x) f = R(x-1), R the regular series.
  GradedVector out;
  if (v.is_zero() || w.is_zero()) return out;
  const long wt = weight_of(v);
  const long N = wt + n;
  const long target = e + wt + m;
  if (target < 0) return out;
  const long T = top_weight(w) + n + wt + m;
  std::vector<GradedVector> R(T + 1);
  for (long t = 0; t <= T; ++t) R[t] = regular_coeff(A, v, t, w, m, n);
  for (long k = 0; k <= std::min(target, T); ++k) {
    GradedVector Pk;
    for (long t = k; t <= T; ++t) Pk.axpy(binom_q(t, k) * sign_pow(t - k), R[t]);
    const long j = target - k;
    out.axpy(binom_q(-N, j) * sign_pow(N + j), Pk);
  }
  return out;
}

GradedVector bullet_left(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n) {
  GradedVector out;
  for (const auto& [wt_i, piece] : v.parts()) {
    const long wt = wt_i;
    long r = 0;
    for (const auto& ur : A.L1_powers(piece)) {
      // x^{wt-1}(1-x)^{wt-1}(-1+x)^{-r} = (-1)^r x^{wt-1} (1-x)^{wt-1-r}
      for (long i = 0; i <= r + m; ++i)
        out.axpy(binom_q(wt - 1 - r, i) * sign_pow(r + i), yl_coeff(A, ur, -wt - i, w, m, n));
      ++r;
    }
  }
  return out;
}

GradedVector bullet_right(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n) {
  return yr_shifted_mode(A, v, 0, w, m, n);
}

GradedVector yr_shifted_mode(const VOA& A, const GradedVector& v, long p, const GradedVector& w, int m, int n) {
  GradedVector out;
  for (const auto& [wt_i, piece] : v.parts()) {
    const long wt = wt_i;
    long r = 0;
    for (const auto& ur : A.L1_powers(piece)) {
      for (long i = 0; i <= r + n - p; ++i)
        out.axpy(binom_q(wt - 1 - p - r, i), yr_coeff(A, ur, -wt - p - i, w, m, n));
      ++r;
    }
  }
  return out;
}

GradedVector yr_deformed_coeff(const VOA& A, const GradedVector& v, long t, const GradedVector& w, int m,
                               int n) {
  GradedVector out;
  for (const auto& [wt_i, piece] : v.parts()) {
    const long wt = wt_i;
    long r = 0;
    for (const auto& ur : A.L1_powers(piece)) {
      const long wt_r = wt - r;
      for (long e = -wt_r - n; e <= t; ++e) {
        const long a = r - 2 * wt - e;
        out.axpy(binom_q(a, t - e) * sign_pow(t - e), yr_coeff(A, ur, e, w, m, n));
      }
      ++r;
    }
  }
  return out;
}

std::pair<GradedVector, GradedVector> lr_zero_modes(const VOA& A, const GradedVector& w, int m, int n) {
  const GradedVector om = A.omega();
  GradedVector left = yl_coeff(A, om, -2, w, m, n);
  left.axpy(-1, yl_coeff(A, om, -3, w, m, n));
  GradedVector right = yr_coeff(A, om, -2, w, m, n);
  right += yr_coeff(A, om, -3, w, m, n);
  return {left, right};
}

}  // namespace voakit
