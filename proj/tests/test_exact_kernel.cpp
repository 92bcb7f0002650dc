#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "voakit/errors.hpp"
#include "voakit/laurent.hpp"
#include "voakit/subspace.hpp"
#include "voakit/voa.hpp"

using namespace voakit;

namespace {

// Vectors in a single 3-dimensional weight-0 piece.
const Grading& flat3() {
  static const Grading g({3});
  return g;
}

GradedVector vec(std::initializer_list<long> xs) {
  GradedVector v;
  int i = 0;
  for (long x : xs) v.add({0, i++}, Q(x));
  return v;
}

Q det3(const std::vector<std::vector<Q>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("rationals and binomials") {
  CHECK(frac(2, 4) == frac(1, 2));
  CHECK(frac(3, -6).get_den() == 2);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(-1, 3) == -1);
  CHECK(binom(-2, 2) == 3);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(factorial(5) == 120);
  CHECK(parse_rational("-3/9") == frac(-1, 3));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(to_string(frac(7, 2)) == "7/2");
}

TEST_CASE("binomial recurrence holds for negative tops") {
  for (long a = -8; a <= 8; ++a)
    for (long j = 1; j <= 8; ++j) CHECK(binom(a, j) == binom(a - 1, j) + binom(a - 1, j - 1));
}

TEST_CASE("graded vector arithmetic") {
  GradedVector v({1, 0}, 2);
  v.add({3, 1}, frac(1, 2));
  CHECK(v.min_weight() == 1);
  CHECK(v.max_weight() == 3);
  CHECK_FALSE(v.homogeneous());
  CHECK(v.parts().size() == 2);
  CHECK(v.part(3) == GradedVector({3, 1}, frac(1, 2)));
  CHECK(v.truncated(2) == GradedVector({1, 0}, 2));
  GradedVector w = v - v;
  CHECK(w.is_zero());
  v.add({1, 0}, -2);
  CHECK(v.size() == 1);
}

TEST_CASE("grading columns round-trip, including empty pieces") {
  const Grading g({1, 0, 1, 1, 2});
  CHECK(g.dim_upto(4) == 5);
  for (long c = 0; c < g.dim_upto(4); ++c) CHECK(g.col(g.key(c)) == c);
  CHECK(g.key(1) == BasisKey{2, 0});
}

TEST_CASE("echelonize examples") {
  SUBCASE("third vector is the sum of the first two") {
    const Subspace s = echelonize({vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 2, 1})}, flat3(), 0);
    CHECK(s.rank() == 2);
  }
  SUBCASE("empty input") { CHECK(echelonize({}, flat3(), 0).rank() == 0); }
  SUBCASE("support beyond the cutoff is rejected") {
    Subspace s(Grading({1, 1}), 0);
    CHECK_THROWS_AS(s.insert(GradedVector({1, 0})), TruncationError);
    CHECK_FALSE(s.try_insert(GradedVector({1, 0})));
  }
}

TEST_CASE("rank agrees with a determinant oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<Q>> m(3, std::vector<Q>(3));
    std::vector<GradedVector> vs;
    for (int i = 0; i < 3; ++i) {
      GradedVector v;
      for (int j = 0; j < 3; ++j) {
        m[i][j] = frac(d(rng), 1 + (d(rng) + 3) % 3);
        v.add({0, j}, m[i][j]);
      }
      vs.push_back(v);
    }
    const bool full = echelonize(vs, flat3(), 0).rank() == 3;
    CHECK(full == (det3(m) != 0));
  }
}

TEST_CASE("membership") {
  const Subspace s = echelonize({vec({1, 1, 0}), vec({0, 1, 1})}, flat3(), 0);
  SUBCASE("zero vector") {
    const Membership z = s.member(GradedVector());
    CHECK(z.member);
    for (const Q& c : z.coords) CHECK(c == 0);
  }
  SUBCASE("coordinates against the generators") {
    CHECK(s.contains(vec({1, 0, -1})));
    const auto c = combination_of({vec({1, 1, 0}), vec({0, 1, 1})}, vec({1, 0, -1}), flat3(), 0);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == -1);
  }
  SUBCASE("coordinates against the echelon rows reproduce the vector") {
    const Membership mem = s.member(vec({2, 5, 3}));
    REQUIRE(mem.member);
    GradedVector back;
    const auto rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) back.axpy(mem.coords[i], rows[i]);
    CHECK(back == vec({2, 5, 3}));
  }
  SUBCASE("non-member") {
    const Subspace e = echelonize({vec({1, 0, 0})}, flat3(), 0);
    CHECK_FALSE(e.contains(vec({0, 0, 1})));
    CHECK_FALSE(combination_of({vec({1, 0, 0})}, vec({0, 0, 1}), flat3(), 0).has_value());
  }
}

TEST_CASE("reduce is a projector whose kernel is the span") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  const Grading g({2, 3, 2});
  for (int trial = 0; trial < 50; ++trial) {
    auto rand_vec = [&] {
      GradedVector v;
      for (const BasisKey k : g.keys_upto(2)) v.add(k, Q(d(rng)));
      return v;
    };
    const Subspace s = echelonize({rand_vec(), rand_vec(), rand_vec()}, g, 2);
    const GradedVector x = rand_vec();
    const GradedVector r = s.reduce(x);
    CHECK(s.reduce(r) == r);
    CHECK(s.contains(x - r));
    for (const GradedVector& row : s.rows()) CHECK(s.reduce(row).is_zero());
  }
}

TEST_CASE("annihilator") {
  const Grading g({2});
  SUBCASE("span of (1,1)") {
    GradedVector v;
    v.add({0, 0}, 1);
    v.add({0, 1}, 1);
    const Subspace s = echelonize({v}, g, 0);
    const auto ann = s.annihilator();
    REQUIRE(ann.size() == 1);
    GradedVector expect;
    expect.add({0, 0}, 1);
    expect.add({0, 1}, -1);
    CHECK(functional_span(ann, g, 0).contains(expect));
    CHECK(pair(ann[0], v) == 0);
  }
  SUBCASE("full truncation") {
    const Subspace s = echelonize({GradedVector({0, 0}), GradedVector({0, 1})}, g, 0);
    CHECK(s.annihilator().empty());
  }
  SUBCASE("zero span") { CHECK(Subspace(g, 0).annihilator().size() == 2); }
  SUBCASE("pairing past the cutoff throws") {
    const DualFunctional f{0, GradedVector({0, 0})};
    CHECK_THROWS_AS(pair(f, GradedVector({1, 0})), TruncationError);
  }
}

TEST_CASE("annihilator dimension is complementary to the rank") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  const Grading g({1, 2, 3});
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<GradedVector> vs;
    for (int i = 0; i < trial % 5; ++i) {
      GradedVector v;
      for (const BasisKey k : g.keys_upto(2)) v.add(k, Q(d(rng)));
      vs.push_back(v);
    }
    const Subspace s = echelonize(vs, g, 2);
    const auto ann = s.annihilator();
    CHECK(static_cast<long>(ann.size() + s.rank()) == g.dim_upto(2));
    for (const auto& f : ann)
      for (const auto& v : vs) CHECK(pair(f, v) == 0);
  }
}

TEST_CASE("kernel of images") {
  // images: e0 -> (1), e1 -> (1), e2 -> (0)
  const std::vector<SparseRow> images = {{{0, Q(1)}}, {{0, Q(1)}}, {}};
  const auto ker = kernel_of_images(images);
  CHECK(ker.size() == 2);
  for (const auto& k : ker) CHECK(k[0] + k[1] == 0);
}

TEST_CASE("binomial series") {
  SUBCASE("geometric series is truncated") {
    const ScalarSeries s = binom_expand(-1, 3);
    CHECK(s.truncated());
    CHECK(s.order() == 3);
    for (long e = 0; e <= 3; ++e) CHECK(s.coeff(e) == sign_pow(e));
    CHECK_THROWS_AS(s.coeff(4), TruncationError);
  }
  SUBCASE("nonnegative power is exact") {
    const ScalarSeries s = binom_expand(2, 5);
    CHECK_FALSE(s.truncated());
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 2);
    CHECK(s.coeff(2) == 1);
    CHECK(s.coeff(9) == 0);
  }
  SUBCASE("(-z + x)^{-1}") {
    const auto terms = binom_expand_two(-1, Q(-1), 2);
    REQUIRE(terms.size() == 3);
    for (const auto& t : terms) {
      CHECK(t.coeff == -1);
      CHECK(t.zexp == -1 - t.xexp);
    }
  }
}

TEST_CASE("residues and products") {
  ScalarSeries s;
  s.add(-2, 5);
  s.add(-1, 7);
  s.add(0, 9);
  CHECK(residue(s) == 7);
  CHECK(residue(s.derivative()) == 0);
  CHECK_THROWS_AS(residue(binom_expand(-1, 3).shifted(-5)), TruncationError);

  ScalarSeries one_plus_x = binom_expand(1, 1);
  const ScalarSeries prod = multiply(one_plus_x, binom_expand(-1, 3));
  CHECK(prod.order() == 3);
  CHECK(prod.coeff(0) == 1);
  for (long e = 1; e <= 3; ++e) CHECK(prod.coeff(e) == 0);

  const ScalarSeries xx = multiply(ScalarSeries::monomial(-2, 1), ScalarSeries::monomial(3, 1));
  CHECK(xx == ScalarSeries::monomial(1, 1));

  CHECK_THROWS_AS(multiply(VectorSeries::monomial(0, GradedVector({0, 0})), VectorSeries()), std::invalid_argument);
}

TEST_CASE("binomial times a vertex operator series matches direct convolution") {
  const VOA A = VOA::free_boson(12);
  const GradedVector om = A.omega();
  VectorSeries y;
  for (long j = 0; j <= 5; ++j) y.add(j, A.mode(om, -j - 1, A.vacuum()));
  const VectorSeries prod = multiply(binom_expand(2, 2), y);
  for (long k = 0; k <= 5; ++k) {
    GradedVector expect;
    for (long i = 0; i <= std::min(2L, k); ++i) expect.axpy(binom_q(2, i), y.coeff(k - i));
    CHECK(prod.coeff(k) == expect);
  }
}
