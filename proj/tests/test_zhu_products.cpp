#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "voakit/dual.hpp"
#include "voakit/errors.hpp"
#include "voakit/products.hpp"
#include "voakit/spans.hpp"
#include "voakit/vacuum.hpp"

using namespace voakit;

namespace {

const VOA& boson() {
  static const VOA A = VOA::free_boson(20);
  return A;
}
const VOA& vir() {
  static const VOA A = VOA::virasoro(frac(1, 2), 20);
  return A;
}
SpanStore& boson_spans() {
  static SpanStore s(boson());
  return s;
}

GradedVector lit(const char* s) { return boson().literal(s); }

}  // namespace

TEST_CASE("star_n examples") {
  const VOA& A = boson();
  for (int n = 0; n <= 3; ++n)
    for (const BasisKey k : A.keys_upto(4)) CHECK(star_n(A, A.vacuum(), GradedVector(k), n) == GradedVector(k));
  CHECK(star_n(A, lit("h"), lit("h"), 0) == lit("a(-1)^2"));
  CHECK(star_n(A, lit("h"), lit("h"), 0) == 2 * A.omega());
  CHECK(star_n(A, A.omega(), A.vacuum(), 0) == A.omega());
}

TEST_CASE("circ_n examples") {
  const VOA& A = boson();
  const GradedVector translate_omega = shifted_translation(A, A.omega(), 0);
  for (const BasisKey k : A.keys_upto(4)) CHECK(circ_n(A, A.vacuum(), GradedVector(k), 0).is_zero());
  CHECK(circ_n(A, lit("h"), lit("h"), 0) == lit("a(-2)a(-1)") + lit("a(-1)^2"));
  CHECK(circ_n(A, lit("h"), lit("h"), 0) == translate_omega);
  CHECK(circ_n(A, A.omega(), A.vacuum(), 0) == translate_omega);
}

TEST_CASE("dot action examples") {
  const VOA& A = boson();
  for (const BasisKey k : A.keys_upto(5)) {
    const GradedVector w(k);
    CHECK(dot_action(A, A.vacuum(), w) == w);
    CHECK(dot_action(A, A.omega(), w) == Q(k.wt) * w);
  }
  CHECK(dot_action(A, lit("h"), lit("h")).is_zero());
}

TEST_CASE("circ_mn examples") {
  const VOA& A = boson();
  for (int n = 0; n <= 2; ++n)
    for (const BasisKey a : A.keys_upto(3))
      for (const BasisKey b : A.keys_upto(3))
        CHECK(circ_mn(A, GradedVector(a), GradedVector(b), n, n) == circ_n(A, GradedVector(a), GradedVector(b), n));
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) CHECK(circ_mn(A, A.vacuum(), lit("a(-2)"), m, n).is_zero());
  CHECK(circ_mn(A, lit("h"), lit("h"), 0, 1) == lit("a(-3)a(-1)") + lit("a(-2)a(-1)"));
}

TEST_CASE("general dagger generators") {
  const VOA& A = boson();
  const GradedVector h = lit("h");
  for (const BasisKey k : A.keys_upto(3)) {
    const GradedVector v(k);
    CHECK(o_dagger_general(A, v, h, 1, 0, 0, 0) == circ_mn(A, v, h, 1, 0));
    if (k.wt > 0)
      CHECK(o_dagger_general(A, v, h, 0, 1, 1, 1) == res_sum(A, v, k.wt + 0 + 1, -0 - 1 - 3, h));
  }
  CHECK_THROWS(o_dagger_general(A, h, h, 0, 0, 2, 1));
  const auto span = boson_spans().get({SpanKind::ODagger, 0, 0, 4, 4});
  CHECK(span->contains(o_dagger_general(A, h, h, 0, 0, 0, 1)));
}

TEST_CASE("lower and upper left products") {
  const VOA& A = boson();
  for (const BasisKey k : A.keys_upto(4)) {
    const GradedVector w(k);
    CHECK(bar_star_lower(A, A.vacuum(), w, 0, 0) == w);
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) CHECK(bar_star_upper(A, A.vacuum(), w, m, n) == w);
  }
  for (int n = 0; n <= 2; ++n)
    for (const BasisKey a : A.keys_upto(3))
      for (const BasisKey b : A.keys_upto(3))
        CHECK(bar_star_upper(A, GradedVector(a), GradedVector(b), n, n) == star_n(A, GradedVector(a), GradedVector(b), n));
  CHECK(bar_star_upper(A, A.omega(), A.vacuum(), 0, 0) == A.omega());
  const GradedVector h = lit("h");
  CHECK(bar_star_lower(A, h, A.vacuum(), 0, 0) ==
        bar_star_upper(A, h, A.vacuum(), 0, 0) - lr_correction(A, h, A.vacuum()));
}

TEST_CASE("left-right difference identity on both instances") {
  for (const VOA* A : {&boson(), &vir()})
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (const BasisKey a : A->keys_upto(3))
          for (const BasisKey b : A->keys_upto(3)) {
            const GradedVector v(a), w(b);
            CHECK(bar_star_lower(*A, v, w, m, n) == bar_star_upper(*A, v, w, m, n) - lr_correction(*A, v, w));
          }
}

TEST_CASE("degree-shifted product") {
  const VOA& A = boson();
  for (int p = -2; p <= 2; ++p)
    for (const BasisKey k : A.keys_upto(3)) {
      const GradedVector w(k);
      const GradedVector r = bracket_star(A, A.vacuum(), p, w, 0, 2);
      CHECK(r == (p == 0 ? w : GradedVector()));
    }
  for (int n = 0; n <= 2; ++n) {
    const auto span = boson_spans().get({SpanKind::OPrime, 0, n, 6, 6});
    CHECK(span->contains(bracket_star(A, lit("h"), n, A.vacuum(), 0, 0) - lit("h")));
  }
}

TEST_CASE("vandermonde collapse") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int w = 0; w <= 3; ++w)
        for (int r = n; r <= n + 10; ++r) {
          Z s = 0;
          for (int j = 0; j <= r; ++j) s += binom(m + w, j) * binom(n - m - w, r - j);
          CHECK(s == (r == n ? 1 : 0));
        }
}

TEST_CASE("deformed products") {
  const VOA& A = boson();
  const GradedVector h = lit("h");
  for (const BasisKey a : A.keys_upto(3))
    for (const BasisKey b : A.keys_upto(3))
      CHECK(bullet_z0(A, GradedVector(a), GradedVector(b), 0) == dot_action(A, GradedVector(a), GradedVector(b)));
  CHECK(bullet_z0(A, h, A.vacuum(), -1).is_zero());
  for (const Q z0 : {Q(0), Q(1), Q(-1), frac(1, 3)}) CHECK(bullet_z0(A, A.omega(), h, z0) == h);
  for (const BasisKey b : A.keys_upto(4)) {
    const GradedVector w(b);
    for (long k = -2; k <= 2; ++k) CHECK(deformed_mode(A, h, k, w, 0) == A.mode(h, k, w));
    CHECK(deformed_mode(A, A.omega(), 1, w, -1) == A.L(0, w) + A.L(1, w));
  }
}

TEST_CASE("deformed operator matches direct substitution on the vacuum") {
  // Y(e^{-z0(1+z0 x)L(1)}(1+z0 x)^{-2L(0)} h, x/(1+z0 x)) 1 with L(1)h = 0 is
  // (1+z0 x)^{-2} sum_{j>=0} h_{-j-1} 1 x^j (1+z0 x)^{-j}.
  const VOA& A = boson();
  const GradedVector h = lit("h");
  const Q z0 = 1;
  for (long t = 0; t <= 4; ++t) {
    GradedVector expect;
    for (long j = 0; j <= t; ++j) expect.axpy(binom_q(-2 - j, t - j), A.mode(h, -j - 1, A.vacuum()));
    CHECK(deformed_mode(A, h, -t - 1, A.vacuum(), z0) == expect);
  }
}

TEST_CASE("computed spans") {
  const VOA& A = boson();
  SUBCASE("O_0 contains (L(-1)+L(0))omega") {
    CHECK(boson_spans().get({SpanKind::On, 0, 0, 4, 4})->contains(shifted_translation(A, A.omega(), 0)));
  }
  SUBCASE("dagger spans shrink as n grows") {
    for (int m = 0; m <= 1; ++m)
      for (const auto& [n, np] : {std::pair{2, 1}, std::pair{1, 0}}) {
        const Subspace big = boson_spans().get({SpanKind::ODagger, m, np, 6, 4})->restricted(6);
        const Subspace small = boson_spans().get({SpanKind::ODagger, m, n, 6, 4})->restricted(6);
        CHECK(big.contains_subspace(small));
      }
  }
  SUBCASE("O_n agrees with the primed family at m = n") {
    for (int n = 0; n <= 1; ++n) {
      const Subspace on = boson_spans().get({SpanKind::On, 0, n, 6, 6})->restricted(6);
      const Subspace pr = boson_spans().get({SpanKind::OPrime, n, n, 6, 6})->restricted(6);
      CHECK(on.rank() == pr.rank());
      CHECK(on.contains_subspace(pr));
    }
  }
  SUBCASE("serial and parallel generation agree") {
    const SpanRequest req{SpanKind::OPrime, 1, 1, 5, 3};
    CHECK(span_generators(A, req, false) == span_generators(A, req, true));
  }
}

TEST_CASE("A_n(V) ideal and associativity on a small corpus") {
  const VOA& A = boson();
  for (int n = 0; n <= 1; ++n) {
    const auto span = boson_spans().get({SpanKind::On, 0, n, 8, 6});
    const auto gens = span_generators(A, {SpanKind::On, 0, n, 4, 0});
    for (const auto& o : gens)
      for (const BasisKey k : A.keys_upto(2)) {
        CHECK(span->contains(star_n(A, GradedVector(k), o, n)));
        CHECK(span->contains(star_n(A, o, GradedVector(k), n)));
      }
    for (const BasisKey a : A.keys_upto(2))
      for (const BasisKey b : A.keys_upto(2))
        for (const BasisKey c : A.keys_upto(2)) {
          const GradedVector u(a), v(b), w(c);
          CHECK(span->contains(star_n(A, star_n(A, u, v, n), w, n) - star_n(A, u, star_n(A, v, w, n), n)));
        }
  }
}

TEST_CASE("vacuum spaces of the free boson") {
  const VOA& A = boson();
  const Subspace o0 = omega_n(A, 0, 6, 12), o1 = omega_n(A, 1, 6, 12), o2 = omega_n(A, 2, 6, 12),
                 o3 = omega_n(A, 3, 6, 12);
  CHECK(o0.rank() == 1);
  CHECK(o0.contains(A.vacuum()));
  CHECK(o1.rank() == 2);
  CHECK(o1.contains(lit("h")));
  CHECK(o1.contains_subspace(o0));
  CHECK(o2.contains_subspace(o1));
  CHECK(o3.contains_subspace(o2));
  for (const Q z0 : {Q(1), Q(-1)}) {
    const Subspace d = omega_n(A, 1, 6, 12, z0);
    CHECK(d.rank() == o1.rank());
    CHECK(d.contains_subspace(o1));
  }
}

TEST_CASE("vacuum space module structure") {
  for (const VOA* A : {&boson(), &vir()}) {
    for (int n = 1; n <= 2; ++n) {
      const Subspace om = omega_n(*A, n, 6, 12);
      const auto rows = om.rows();
      // u . (v . w) = (u *_n v) . w
      for (const BasisKey a : A->keys_upto(3))
        for (const BasisKey b : A->keys_upto(3))
          for (const GradedVector& w : rows) {
            const GradedVector u(a), v(b);
            CHECK(dot_action(*A, u, dot_action(*A, v, w)) == dot_action(*A, star_n(*A, u, v, n), w));
          }
      // O_n(V) . Omega_n = 0
      for (const GradedVector& o : span_generators(*A, {SpanKind::On, 0, n, 4, 0}))
        for (const GradedVector& w : rows) CHECK(dot_action(*A, o, w).is_zero());
      // A mode word of total weight below -n kills Omega_n: (v_k)^{n+1} for k = wt v, (v_k)^n for k > wt v.
      for (const BasisKey a : A->keys_upto(3))
        for (long k = a.wt; k <= a.wt + 1; ++k)
          for (const GradedVector& w : rows) {
            GradedVector x = w;
            const int power = k == a.wt ? n + 1 : n;
            for (int i = 0; i < power; ++i) x = A->mode(GradedVector(a), k, x);
            CHECK(x.is_zero());
          }
      // u_k Omega_n lands in Omega_{n + wt u - k - 1}
      std::map<long, Subspace> targets;
      for (const BasisKey a : A->keys_upto(2))
        for (long k = -1; k <= 2; ++k) {
          const long target = n + a.wt - k - 1;
          if (target < 0) continue;
          if (!targets.count(target)) targets.emplace(target, omega_n(*A, static_cast<int>(target), 6 + 3, 12 + 3));
          const Subspace& tgt = targets.at(target);
          for (const GradedVector& w : rows) CHECK(tgt.contains(A->mode(GradedVector(a), k, w)));
        }
    }
  }
}

TEST_CASE("associated graded pieces") {
  const VOA& A = boson();
  const GradedPieces gp = associated_graded(A, 3, 4, 10);
  long total = 0;
  for (std::size_t n = 0; n < gp.piece_dims.size(); ++n) {
    total += gp.piece_dims[n];
    CHECK(total == static_cast<long>(gp.chain[n].rank()));
  }
  CHECK(gp.piece_dims[0] == 1);
  CHECK(gp.chain[0].contains(A.vacuum()));
}

TEST_CASE("contragredient vertex operator") {
  const VOA& A = boson();
  const GradedVector h = lit("h");
  for (const BasisKey k : A.keys_upto(4)) {
    const GradedVector w(k);
    for (long e = -4; e <= 4; ++e) {
      CHECK(ystar_coeff(A, A.vacuum(), e, w) == (e == 0 ? w : GradedVector()));
      CHECK(ystar_coeff(A, h, e, w) == -1 * A.mode(h, e + 1, w));
    }
    CHECK(ystar_coeff(A, A.omega(), -3, w) == A.L(-1, w));
  }
}

TEST_CASE("vacuum spaces of the dual: two computations agree") {
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 1; ++n) {
      const VacuumComparison c = vacuum_space_mn(boson(), boson_spans(), m, n, 5, 4);
      CHECK(c.equal);
      CHECK(c.annihilator.size() == c.kernel.size());
    }
  const VacuumComparison c00 = vacuum_space_mn(boson(), boson_spans(), 0, 0, 4, 4);
  const VacuumComparison c01 = vacuum_space_mn(boson(), boson_spans(), 0, 1, 4, 4);
  const Subspace k00 = functional_span(c00.kernel, boson().grading(), 4);
  const Subspace k01 = functional_span(c01.kernel, boson().grading(), 4);
  CHECK(k00.contains(boson().vacuum()));
  CHECK(k01.contains_subspace(k00));
}

TEST_CASE("dual operators on the vacuum space") {
  const VOA& A = boson();
  const int D = 7, M = 4;
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 1; ++n) {
      const auto span = boson_spans().get({SpanKind::ODagger, m, n, D, M});
      const auto fs = span->restricted(D).annihilator();
      for (const BasisKey k : A.keys_upto(3)) {
        const GradedVector w(k);
        for (long e = -3; e <= 3; ++e) {
          CHECK(yr_coeff(A, A.vacuum(), e, w, m, n) == (e == 0 ? w : GradedVector()));
          CHECK(yl_coeff(A, A.vacuum(), e, w, m, n) == (e == 0 ? w : GradedVector()));
        }
        CHECK(span->contains(bullet_left(A, A.vacuum(), w, m, n) - w));
        CHECK(span->contains(bullet_right(A, A.vacuum(), w, m, n) - w));
        // Y^R(v,x)f has no exponent below -wt v - n.
        for (const BasisKey vk : A.keys_upto(2))
          for (long e = -static_cast<long>(vk.wt) - n - 3; e < -static_cast<long>(vk.wt) - n; ++e) {
            const GradedVector p = yr_coeff(A, GradedVector(vk), e, w, m, n);
            if (p.is_zero() || p.max_weight() > D) continue;
            for (const auto& f : fs) CHECK(pair(f, p) == 0);
          }
        // left and right actions commute
        for (const BasisKey a : A.keys_upto(2))
          for (const BasisKey b : A.keys_upto(2)) {
            const GradedVector u(a), v(b);
            const GradedVector lr = bullet_right(A, v, bullet_left(A, u, w, m, n), m, n);
            const GradedVector rl = bullet_left(A, u, bullet_right(A, v, w, m, n), m, n);
            CHECK(span->contains(lr - rl));
          }
      }
    }
}

TEST_CASE("eigenspace of the zero-mode difference is the primed annihilator") {
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 1; ++n) {
      const Subspace eig = eigen_span(boson(), boson_spans(), m, n, 6, 4).restricted(6);
      const Subspace prime = boson_spans().get({SpanKind::OPrime, m, n, 6, 4})->restricted(6);
      CHECK(eig.rank() == prime.rank());
      CHECK(eig.contains_subspace(prime));
    }
}

TEST_CASE("a single zero-weight mode does not kill the degree-one vacuum space") {
  const VOA& A = boson();
  const GradedVector h = A.literal("h");
  CHECK(omega_n(A, 1, 6, 12).contains(h));
  CHECK(A.mode(h, 1, h) == A.vacuum());
}

TEST_CASE("primed vacuum pieces are direct up to truncation loss") {
  // The pieces are eigenspaces of one operator that raises the pulled-back
  // weight by one, so separating K eigenvalues costs K - 1 weight levels: a
  // relation among the pieces at cutoff D vanishes piecewise on weights <= D - K + 1.
  const int D = 6, K = 4;
  const VOA& A = boson();
  for (int m = 0; m <= 1; ++m) {
    std::vector<DualFunctional> all;
    std::vector<int> owner;
    for (int n = 0; n < K; ++n)
      for (const auto& f : boson_spans().get({SpanKind::OPrime, m, n, D, 4})->restricted(D).annihilator()) {
        all.push_back(f);
        owner.push_back(n);
      }
    std::vector<SparseRow> images;
    for (const auto& f : all) {
      SparseRow r;
      for (const auto& [k, c] : f.coords) r.push_back({A.grading().col(k), c});
      std::sort(r.begin(), r.end());
      images.push_back(r);
    }
    for (const auto& rel : kernel_of_images(images))
      for (int n = 0; n < K; ++n) {
        GradedVector part;
        for (std::size_t i = 0; i < all.size(); ++i)
          if (owner[i] == n) part.axpy(rel[i], all[i].coords);
        CHECK(part.truncated(D - K + 1).is_zero());
      }
  }
}
