#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voakit/induced.hpp"
#include "voakit/products.hpp"
#include "voakit/vacuum.hpp"

using namespace voakit;

namespace {

const VOA& boson() {
  static const VOA A = VOA::free_boson(20);
  return A;
}
SpanStore& spans() {
  static SpanStore s(boson());
  return s;
}
const DiamondFamily& family(int m) {
  static const DiamondFamily f0(boson(), spans(), 0, 4, 6, 6);
  static const DiamondFamily f1(boson(), spans(), 1, 4, 6, 6);
  return m == 0 ? f0 : f1;
}

// Extra margin headroom for products of two weight-2 operators.
const DiamondFamily& wide_family(int m) {
  static const DiamondFamily f0(boson(), spans(), 0, 4, 6, 8);
  static const DiamondFamily f1(boson(), spans(), 1, 4, 6, 8);
  return m == 0 ? f0 : f1;
}

std::vector<Q> apply(const std::vector<std::vector<Q>>& mat, const std::vector<Q>& x) {
  std::vector<Q> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t l = 0; l < out.size(); ++l) out[l] += mat[j][l] * x[j];
  return out;
}

// Column j holds the coordinates of a . basis[j].
std::vector<std::vector<Q>> action_matrix(const AmModule& U, const GradedVector& a) {
  std::vector<std::vector<Q>> m;
  for (int j = 0; j < U.dim(); ++j) m.push_back(module_action(boson(), U, a, j));
  return m;
}

}  // namespace

TEST_CASE("vacuum acts as the identity in degree zero only") {
  const VOA& A = boson();
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 2; ++n)
      for (const BasisKey k : family(m).piece_basis(n)) {
        if (k.wt > 3) continue;
        const GradedVector w(k);
        for (long p = -2; p <= 2; ++p) {
          const GradedVector r = family(m).vp_action(A.vacuum(), p, w, n);
          if (p == 0)
            CHECK(family(m).equivalent(n, r, w));
          else
            CHECK(r.is_zero());
        }
      }
}

TEST_CASE("h[n] on the vacuum class gives h") {
  const VOA& A = boson();
  const GradedVector h = A.literal("h");
  for (int n = 0; n <= 2; ++n) CHECK(family(0).equivalent(n, family(0).vp_action(h, n, A.vacuum(), 0), h));
}

TEST_CASE("degree-shifted operators do not depend on the representative") {
  const VOA& A = boson();
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 1; ++n) {
      const auto gens = span_generators(A, {SpanKind::OPrime, m, n, 3, 0});
      for (const GradedVector u : {A.literal("h"), A.omega()})
        for (long p = -1; p <= 1; ++p)
          for (const BasisKey k : family(m).piece_basis(n)) {
            if (k.wt > 2) continue;
            const GradedVector w(k);
            const GradedVector base = family(m).vp_action(u, p, w, n);
            for (std::size_t i = 0; i < gens.size(); i += 3)
              CHECK(family(m).vp_action(u, p, w + gens[i], n) == base);
          }
    }
}

TEST_CASE("representatives are reduced and land in the shifted degree") {
  const VOA& A = boson();
  const GradedVector h = A.literal("h");
  for (int n = 0; n <= 2; ++n)
    for (long p = -n; p <= 2 - n; ++p)
      for (const BasisKey k : family(0).piece_basis(n)) {
        if (k.wt > 2) continue;
        const GradedVector r = family(0).vp_action(h, p, GradedVector(k), n);
        CHECK(family(0).reduce(static_cast<int>(n + p), r) == r);
      }
}

TEST_CASE("commutator formula on the diamond family") {
  const VOA& A = boson();
  const std::vector<GradedVector> gens = {A.literal("h"), A.omega()};
  for (int m = 0; m <= 1; ++m)
    for (const GradedVector& u : gens)
      for (const GradedVector& v : gens)
        for (int n = 0; n <= 2; ++n)
          for (long p = -1; p <= 1; ++p)
            for (long q = -1; q <= 1; ++q) {
              const long top = n + p + q;
              if (top < 0 || top > 3) continue;
              const long a = u.max_weight() - 1 - p;
              for (const BasisKey k : wide_family(m).piece_basis(n)) {
                if (k.wt > 2) continue;
                const GradedVector xi(k);
                const DiamondFamily& f = wide_family(m);
                GradedVector lhs = f.vp_action(u, p, f.vp_action(v, q, xi, n), static_cast<int>(n + q));
                lhs -= f.vp_action(v, q, f.vp_action(u, p, xi, n), static_cast<int>(n + p));
                GradedVector rhs;
                for (long i = 0; i <= u.max_weight() + v.max_weight(); ++i) {
                  const GradedVector uv = A.mode(u, i, v);
                  if (!uv.is_zero()) rhs.axpy(binom_q(a, i), f.vp_action(uv, p + q, xi, n));
                }
                CHECK(f.reduce(static_cast<int>(top), lhs - rhs).is_zero());
              }
            }
}

TEST_CASE("left and right actions on the primed quotient commute") {
  const VOA& A = boson();
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 1; ++n)
      for (const BasisKey uk : A.keys_upto(2))
        for (const BasisKey sk : A.keys_upto(2))
          for (const BasisKey wk : A.keys_upto(2)) {
            const GradedVector u(uk), s(sk), w(wk);
            const GradedVector a = bar_star_upper(A, u, bar_star_lower(A, s, w, m, n), m, n);
            const GradedVector b = bar_star_lower(A, s, bar_star_upper(A, u, w, m, n), m, n);
            CHECK(family(m).equivalent(n, a, b));
          }
}

TEST_CASE("vacuum-space modules of the Zhu algebras") {
  const VOA& A = boson();
  SUBCASE("degree-zero module is one-dimensional with omega acting by zero") {
    const AmModule U = omega_module(A, 0, 6, 12);
    CHECK(U.dim() == 1);
    CHECK(module_action(A, U, A.omega(), 0)[0] == 0);
    CHECK(module_action(A, U, A.vacuum(), 0)[0] == 1);
  }
  SUBCASE("action respects the star product") {
    for (int m = 0; m <= 1; ++m) {
      const AmModule U = omega_module(A, m, 6, 12);
      for (const BasisKey a : A.keys_upto(3))
        for (const BasisKey b : A.keys_upto(3)) {
          const auto ab = action_matrix(U, star_n(A, GradedVector(a), GradedVector(b), m));
          const auto ma = action_matrix(U, GradedVector(a)), mb = action_matrix(U, GradedVector(b));
          for (int j = 0; j < U.dim(); ++j) CHECK(ab[j] == apply(ma, mb[j]));
        }
    }
  }
}

TEST_CASE("universal map F") {
  const VOA& A = boson();
  const AmModule U0 = omega_module(A, 0, 6, 12);
  const AmModule U1 = omega_module(A, 1, 6, 12);
  for (const BasisKey k : A.keys_upto(3)) {
    const GradedVector v(k);
    for (const GradedVector& w : U1.basis) CHECK(F_nm(A, v, w, 1, 1) == dot_action(A, v, w));
  }
  for (int n = 0; n <= 3; ++n)
    for (const GradedVector& w : U1.basis) CHECK(F_nm(A, A.vacuum(), w, 1, n) == (n == 1 ? w : GradedVector()));
  // psi-tilde on the degree-m piece is psi.
  CHECK(F_nm(A, A.vacuum(), U0.basis[0], 0, 0) == U0.basis[0]);
  // The induced map on vp_action images of degree-m elements is forced by modes.
  const GradedVector h = A.literal("h");
  for (int n = 0; n <= 3; ++n)
    for (const GradedVector& u : U0.basis) {
      const GradedVector image = family(0).vp_action(h, n, A.vacuum(), 0);
      CHECK(F_nm(A, image, u, 0, n) == A.mode(h, -n, F_nm(A, A.vacuum(), u, 0, 0)));
    }
}

TEST_CASE("induced module pieces") {
  const VOA& A = boson();
  SUBCASE("degree-m piece reproduces U") {
    for (int m = 0; m <= 1; ++m) {
      const AmModule U = omega_module(A, m, 6, 12);
      const DiamondFamily fam(A, spans(), m, m, 6, 6);
      const InducedModule ind = induce(fam, U, 6);
      CHECK(ind.pieces.at(m).dim == U.dim());
    }
  }
  SUBCASE("relations are killed by the universal map") {
    const AmModule U = omega_module(A, 0, 6, 12);
    for (int n = 0; n <= 2; ++n)
      for (const BasisKey sk : A.keys_upto(3))
        for (const BasisKey ak : family(0).piece_basis(n)) {
          if (ak.wt > 3) continue;
          const GradedVector s(sk), a(ak);
          const GradedVector lhs = F_nm(A, bar_star_lower(A, s, a, 0, n), U.basis[0], 0, n);
          GradedVector rhs;
          const auto su = module_action(A, U, s, 0);
          rhs.axpy(su[0], F_nm(A, a, U.basis[0], 0, n));
          CHECK(lhs == rhs);
        }
  }
}
