#include "voakit/products.hpp"

#include <cstdlib>
#include <stdexcept>

namespace voakit {

GradedVector res_sum(const VOA& A, const GradedVector& u, long a, long s, const GradedVector& w,
                     const Q& lambda) {
  GradedVector out;
  if (u.is_zero() || w.is_zero()) return out;
  const long jmax_grade = static_cast<long>(u.max_weight()) + w.max_weight() - s - 1;
  const long jmax = (a >= 0) ? std::min(a, jmax_grade) : jmax_grade;
  Q lj = 1;
  for (long j = 0; j <= jmax; ++j) {
    if (j > 0) lj *= lambda;
    if (lj == 0) break;
    out.axpy(binom_q(a, j) * lj, A.mode(u, s + j, w));
  }
  return out;
}

namespace {

// Sum over weight pieces of v of body(piece, wt).
template <class F>
GradedVector by_parts(const GradedVector& v, F body) {
  GradedVector out;
  for (const auto& [wt, piece] : v.parts()) out += body(piece, static_cast<long>(wt));
  return out;
}

}  // namespace

GradedVector star_n(const VOA& A, const GradedVector& v, const GradedVector& w, int n) {
  return by_parts(v, [&](const GradedVector& u, long wt) {
    GradedVector out;
    for (long i = 0; i <= n; ++i) out.axpy(binom_q(-n - 1, i), res_sum(A, u, wt + n, -n - 1 - i, w));
    return out;
  });
}

GradedVector circ_n(const VOA& A, const GradedVector& v, const GradedVector& w, int n) {
  return by_parts(v, [&](const GradedVector& u, long wt) { return res_sum(A, u, wt + n, -2L * n - 2, w); });
}

GradedVector dot_action(const VOA& A, const GradedVector& v, const GradedVector& w) {
  return by_parts(v, [&](const GradedVector& u, long wt) { return A.mode(u, wt - 1, w); });
}

GradedVector circ_mn(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n) {
  return by_parts(v, [&](const GradedVector& u, long wt) { return res_sum(A, u, wt + m, -(m + n + 2L), w); });
}

GradedVector o_dagger_general(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n,
                              int s, int k) {
  if (s < 0 || k < 0 || s > k) throw std::invalid_argument("o_dagger_general needs 0 <= s <= k");
  return by_parts(v, [&](const GradedVector& u, long wt) {
    return res_sum(A, u, wt + m + s, -(m + n + 2L + k), w);
  });
}

GradedVector bar_star_lower(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n) {
  return by_parts(v, [&](const GradedVector& u, long wt) {
    GradedVector out;
    for (long i = 0; i <= m; ++i)
      out.axpy(binom_q(-n - 1, i) * sign_pow(n + i), res_sum(A, u, wt + i - 1, -(n + i + 1), w));
    return out;
  });
}

GradedVector bar_star_upper(const VOA& A, const GradedVector& v, const GradedVector& w, int m, int n) {
  return by_parts(v, [&](const GradedVector& u, long wt) {
    GradedVector out;
    for (long i = 0; i <= n; ++i) out.axpy(binom_q(-m - 1, i), res_sum(A, u, wt + m, -(m + i + 1), w));
    return out;
  });
}

GradedVector bracket_star(const VOA& A, const GradedVector& v, long p, const GradedVector& w, int m, int n) {
  return by_parts(v, [&](const GradedVector& u, long wt) {
    GradedVector out;
    const long top = n + std::labs(p);
    for (long i = 0; i <= top; ++i)
      out.axpy(binom_q(-m - p - 1, i), res_sum(A, u, wt + m, -(p + m + i + 1), w));
    return out;
  });
}

GradedVector lr_correction(const VOA& A, const GradedVector& v, const GradedVector& w) {
  return by_parts(v, [&](const GradedVector& u, long wt) { return res_sum(A, u, wt - 1, 0, w); });
}

GradedVector bullet_z0(const VOA& A, const GradedVector& v, const GradedVector& w, const Q& z0) {
  return by_parts(v, [&](const GradedVector& u, long wt) {
    GradedVector out;
    Q scale = 1;
    for (const auto& ur : A.L1_powers(u)) {
      const long r = wt - ur.max_weight();
      out.axpy(scale, res_sum(A, ur, wt - 1 - r, wt - 1, w, -z0));
      scale *= -z0;
      if (scale == 0) break;
    }
    return out;
  });
}

GradedVector deformed_mode(const VOA& A, const GradedVector& v, long k, const GradedVector& w, const Q& z0) {
  return by_parts(v, [&](const GradedVector& u, long wt) {
    GradedVector out;
    Q scale = 1;
    for (const auto& ur : A.L1_powers(u)) {
      const long r = wt - ur.max_weight();
      out.axpy(scale, res_sum(A, ur, 2 * wt - k - 2 - r, k, w, -z0));
      scale *= -z0;
      if (scale == 0) break;
    }
    return out;
  });
}

GradedVector shifted_translation(const VOA& A, const GradedVector& w, long shift) {
  GradedVector out = A.L(-1, w);
  for (const auto& [k, c] : w) out.add(k, c * (k.wt + shift));
  return out;
}

}  // namespace voakit
