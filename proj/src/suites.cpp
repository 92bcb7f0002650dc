#include "voakit/suites.hpp"

#include <chrono>
#include <fstream>
#include <map>

#include "voakit/brute_force.hpp"
#include "voakit/dual.hpp"
#include "voakit/errors.hpp"
#include "voakit/induced.hpp"
#include "voakit/laurent.hpp"
#include "voakit/products.hpp"
#include "voakit/spans.hpp"
#include "voakit/vacuum.hpp"

namespace voakit {

using nlohmann::json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE_AT_CUTOFF";
  }
  return "?";
}

long Report::count(Verdict v) const {
  long c = 0;
  for (const auto& r : records) c += r.verdict == v;
  return c;
}

int Report::exit_code() const {
  if (count(Verdict::Fail) > 0) return 1;
  if (count(Verdict::Inconclusive) > 0) return 2;
  return 0;
}

Verdict with_margin_retry(int margin, int ceiling, const std::function<Verdict(int)>& check, int* used,
                          const std::function<bool()>& retry) {
  Verdict v = check(margin);
  while (v == Verdict::Inconclusive && margin + 2 <= ceiling && (!retry || retry())) {
    margin += 2;
    v = check(margin);
  }
  if (used) *used = margin;
  return v;
}

namespace {

struct Ctx {
  const SuiteConfig& cfg;
  const VOA& A;
  SpanStore& store;
  std::vector<CheckRecord>& out;

  int cutoff(int def) const { return cfg.cutoff.value_or(def); }
  int margin(int def) const { return cfg.margin.value_or(def); }
  Range m_range(Range def) const { return cfg.m_range.value_or(def); }
  Range n_range(Range def) const { return cfg.n_range.value_or(def); }
  Range p_range(Range def) const { return cfg.p_range.value_or(def); }
  int corpus(int def) const { return cfg.corpus_wt.value_or(def); }
  std::string fmt(const GradedVector& v) const { return A.format(v); }
  std::string tag() const { return kind_name(A.kind()); }
};

// Aggregates the individual checks of one record.
struct Tally {
  long checked = 0;
  long failed = 0;
  long inconclusive = 0;
  json first_fail;
  json first_inconclusive;
  json extra = json::object();

  void pass() { ++checked; }
  void fail(json w) {
    ++checked;
    if (failed++ == 0) first_fail = std::move(w);
  }
  void inconclusive_at(json w) {
    ++checked;
    if (inconclusive++ == 0) first_inconclusive = std::move(w);
  }
  void add(Verdict v, const std::function<json()>& witness) {
    if (v == Verdict::Pass) pass();
    else if (v == Verdict::Fail) fail(witness());
    else inconclusive_at(witness());
  }
  Verdict verdict() const {
    if (failed) return Verdict::Fail;
    if (inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
  }
  json witness() const {
    json w = extra;
    w["checked"] = checked;
    w["failed"] = failed;
    w["inconclusive"] = inconclusive;
    if (failed) w["first_failure"] = first_fail;
    if (inconclusive) w["first_inconclusive"] = first_inconclusive;
    return w;
  }
};

using Clock = std::chrono::steady_clock;

void record(Ctx& ctx, const std::string& id, const std::string& anchor, const Tally& t, Clock::time_point start) {
  CheckRecord r;
  r.id = id;
  r.anchor = anchor;
  r.verdict = t.verdict();
  r.witness = t.witness();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  ctx.out.push_back(std::move(r));
}

std::string mn_tag(int m, int n) { return "m=" + std::to_string(m) + ",n=" + std::to_string(n); }

const std::vector<SuiteInfo> kRegistry = {
    {"binomial-identity", "two binomial sums of Laurent polynomials add up to one",
     "exact Laurent-polynomial identity for 0 <= m,n <= 6"},
    {"vandermonde", "Vandermonde collapse of the generation argument",
     "sum_{j+k=r} C(m+w,j)C(n-m-w,k) = delta_{r,n} for r >= n"},
    {"left-right-difference", "lower and upper left products differ by Res (1+x)^{wt v-1} Y(v,x) w",
     "exact vector identity for basis pairs of weight <= 4, m,n <= 2"},
    {"zhu-algebra", "associativity of *_n and theta anti-homomorphism modulo O_n",
     "congruences modulo the computed O_n span"},
    {"vacuum-duality", "annihilator of the dagger span equals the regularity-criterion kernel",
     "dimension and mutual containment at cutoff"},
    {"pairing-duality", "dual bimodule actions pair with the left, right and shifted products",
     "<v.f,w> against <f, v*w> over the computed vacuum basis"},
    {"zero-mode-difference", "difference of the deformed conformal zero modes is L(-1)+L(0)",
     "<(L_r(0)-L_l(0))f, w> = <f, (L(-1)+L(0))w>"},
    {"shifted-stability", "u[p] maps the dagger and primed spans into their degree-shifted spans",
     "generator images are members of the target span"},
    {"generation", "u[n-m] applied to the vacuum recovers u modulo the primed span",
     "u[n-m]*_m^m 1 - u lies in O'_{n,m}"},
    {"universal-map", "F_{n,m} is balanced, equivariant and intertwines modes",
     "adjoint module, U = Omega_0, psi = inclusion"},
    {"diamond-module", "degree-shifted operators satisfy the commutator formula and the contragredient pairing",
     "weak module axioms on finite windows"},
    {"deformation-invariance", "vacuum spaces from Y and from the deformed operators agree",
     "Omega_n from Y vs Y^[1], Y^[-1]; small Omega dimensions"},
    {"oracle-equivalence", "memoized mode engine agrees with the brute-force evaluator",
     "all basis triples with wt v + wt w <= 5"},
};

// ---------------------------------------------------------------------------

void suite_binomial_identity(Ctx& ctx) {
  const auto start = Clock::now();
  const Range mr = ctx.m_range({0, 6}), nr = ctx.n_range({0, 6});
  Tally t;
  bool injected = false;
  for (int m = mr.first; m <= mr.second; ++m)
    for (int n = nr.first; n <= nr.second; ++n) {
      // Both sides multiplied by x^{m+n+1}.
      ScalarSeries lhs;
      for (int i = 0; i <= m; ++i)
        lhs += multiply(ScalarSeries::monomial(m - i, binom_q(-n - 1, i)), binom_expand(n + 1, n + 1));
      for (int i = 0; i <= n; ++i)
        lhs -= multiply(ScalarSeries::monomial(n - i, binom_q(-m - 1, i) * sign_pow(m + i)), binom_expand(i, i));
      Q one = 1;
      if (ctx.cfg.inject_fail && !injected) {
        one = -1;
        injected = true;
      }
      const ScalarSeries rhs = ScalarSeries::monomial(m + n + 1, one);
      t.add(lhs == rhs ? Verdict::Pass : Verdict::Fail, [&] {
        json w;
        w["m"] = m;
        w["n"] = n;
        json l = json::object(), r = json::object();
        for (const auto& [e, c] : lhs.coeffs()) l[std::to_string(e)] = to_string(c);
        for (const auto& [e, c] : rhs.coeffs()) r[std::to_string(e)] = to_string(c);
        w["lhs_times_x^(m+n+1)"] = l;
        w["rhs_times_x^(m+n+1)"] = r;
        return w;
      });
    }
  record(ctx, "binomial-identity", kRegistry[0].anchor, t, start);
}

void suite_vandermonde(Ctx& ctx) {
  const auto start = Clock::now();
  const Range mr = ctx.m_range({0, 4}), nr = ctx.n_range({0, 4});
  const int wmax = ctx.corpus(4);
  Tally t;
  for (int m = mr.first; m <= mr.second; ++m)
    for (int n = nr.first; n <= nr.second; ++n)
      for (int w = 0; w <= wmax; ++w)
        for (int r = n; r <= n + m + w + 8; ++r) {
          Z sum = 0;
          for (int j = 0; j <= r; ++j) sum += binom(m + w, j) * binom(n - m - w, r - j);
          const Z expect = r == n ? 1 : 0;
          t.add(sum == expect ? Verdict::Pass : Verdict::Fail, [&] {
            return json{{"m", m}, {"n", n}, {"w", w}, {"r", r}, {"sum", sum.get_str()}, {"expected", expect.get_str()}};
          });
        }
  record(ctx, "vandermonde", kRegistry[1].anchor, t, start);
}

void suite_left_right_difference(Ctx& ctx) {
  const Range mr = ctx.m_range({0, 2}), nr = ctx.n_range({0, 2});
  const auto keys = ctx.A.keys_upto(ctx.corpus(4));
  for (int m = mr.first; m <= mr.second; ++m)
    for (int n = nr.first; n <= nr.second; ++n) {
      const auto start = Clock::now();
      Tally t;
      for (const BasisKey vk : keys)
        for (const BasisKey wk : keys) {
          const GradedVector v(vk), w(wk);
          const GradedVector lhs = bar_star_lower(ctx.A, v, w, m, n);
          const GradedVector rhs = bar_star_upper(ctx.A, v, w, m, n) - lr_correction(ctx.A, v, w);
          t.add(lhs == rhs ? Verdict::Pass : Verdict::Fail, [&] {
            return json{{"v", ctx.fmt(v)}, {"w", ctx.fmt(w)}, {"lhs", ctx.fmt(lhs)}, {"rhs", ctx.fmt(rhs)}};
          });
        }
      record(ctx, "left-right-difference/" + ctx.tag() + "/" + mn_tag(m, n), kRegistry[2].anchor, t, start);
    }
}

// Membership of x in the span produced by make(margin), retrying larger margins.
Verdict span_membership(Ctx& ctx, const std::function<std::shared_ptr<const Subspace>(int)>& make,
                        const GradedVector& x, int margin, int* used = nullptr) {
  return with_margin_retry(
      margin, ctx.cfg.margin_ceiling,
      [&](int mg) {
        try {
          return make(mg)->contains(x) ? Verdict::Pass : Verdict::Inconclusive;
        } catch (const TruncationError&) {
          return Verdict::Inconclusive;
        }
      },
      used);
}

void suite_zhu_algebra(Ctx& ctx) {
  const VOA& A = ctx.A;
  const int D = ctx.cutoff(10), M = ctx.margin(6);
  const Range nr = ctx.n_range({0, 1});
  const auto keys = A.keys_upto(ctx.corpus(4));
  for (int n = nr.first; n <= nr.second; ++n) {
    auto make = [&](int mg) { return ctx.store.get({SpanKind::On, 0, n, D, mg}); };
    {
      const auto start = Clock::now();
      Tally t;
      for (const BasisKey ak : keys)
        for (const BasisKey bk : keys) {
          if (ak.wt + bk.wt > D) continue;
          const GradedVector a(ak), b(bk);
          const GradedVector ab = star_n(A, a, b, n);
          for (const BasisKey ck : keys) {
            if (ak.wt + bk.wt + ck.wt > D) continue;
            const GradedVector c(ck);
            const GradedVector diff = star_n(A, ab, c, n) - star_n(A, a, star_n(A, b, c, n), n);
            int used = M;
            const Verdict v = span_membership(ctx, make, diff, M, &used);
            t.add(v, [&] {
              return json{{"a", ctx.fmt(a)}, {"b", ctx.fmt(b)}, {"c", ctx.fmt(c)}, {"difference", ctx.fmt(diff)},
                          {"margin", used}};
            });
          }
        }
      t.extra["cutoff"] = D;
      t.extra["margin"] = M;
      t.extra["span_rank"] = make(M)->rank();
      record(ctx, "zhu-algebra/associativity/n=" + std::to_string(n), kRegistry[3].anchor, t, start);
    }
    {
      const auto start = Clock::now();
      Tally t;
      for (const BasisKey ak : keys)
        for (const BasisKey bk : keys) {
          if (ak.wt + bk.wt > D) continue;
          const GradedVector a(ak), b(bk);
          const GradedVector diff = A.theta(star_n(A, a, b, n)) - star_n(A, A.theta(b), A.theta(a), n);
          int used = M;
          const Verdict v = span_membership(ctx, make, diff, M, &used);
          t.add(v, [&] {
            return json{{"a", ctx.fmt(a)}, {"b", ctx.fmt(b)}, {"difference", ctx.fmt(diff)}, {"margin", used}};
          });
        }
      record(ctx, "zhu-algebra/theta/n=" + std::to_string(n), kRegistry[3].anchor, t, start);
    }
  }
}

void suite_vacuum_duality(Ctx& ctx) {
  const int D = ctx.cutoff(6), M = ctx.margin(4);
  const Range mr = ctx.m_range({0, 2}), nr = ctx.n_range({0, 2});
  for (int m = mr.first; m <= mr.second; ++m)
    for (int n = nr.first; n <= nr.second; ++n) {
      const auto start = Clock::now();
      Tally t;
      VacuumComparison cmp;
      int used = M;
      const Verdict v = with_margin_retry(
          M, ctx.cfg.margin_ceiling,
          [&](int mg) {
            cmp = vacuum_space_mn(ctx.A, ctx.store, m, n, D, mg);
            return cmp.equal ? Verdict::Pass : Verdict::Inconclusive;
          },
          &used);
      t.add(v, [&] {
        return json{{"annihilator_dim", cmp.annihilator.size()}, {"kernel_dim", cmp.kernel.size()}, {"margin", used}};
      });
      t.extra["dimension"] = cmp.annihilator.size();
      t.extra["cutoff"] = D;
      t.extra["margin"] = used;
      record(ctx, "vacuum-duality/" + ctx.tag() + "/" + mn_tag(m, n), kRegistry[4].anchor, t, start);
    }
}

// Vacuum basis at level (m,n): functionals on weights <= D killing the dagger span.
std::vector<DualFunctional> vacuum_basis(Ctx& ctx, int m, int n, int D, int margin) {
  return ctx.store.get({SpanKind::ODagger, m, n, D, margin})->restricted(D).annihilator();
}

// Pairing comparison against a computed vacuum basis. Up to the cutoff every
// <f, lhs> and <f, rhs> is compared. Heavier differences are certified by
// membership in the span itself, which every true vacuum functional kills.
// Failures are inconclusive: the span is an under-approximation.
Verdict compare_pairings(const Subspace& span, int D, const GradedVector& lhs, const GradedVector& rhs,
                         json* detail) {
  const GradedVector diff = lhs - rhs;
  if (diff.is_zero()) return Verdict::Pass;
  try {
    if (diff.max_weight() > D) {
      *detail = json{{"method", "span membership"}, {"weight", diff.max_weight()}};
      return span.contains(diff) ? Verdict::Pass : Verdict::Inconclusive;
    }
    const std::vector<DualFunctional> fs = span.restricted(D).annihilator();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Q a = pair(fs[i], lhs), b = pair(fs[i], rhs);
      if (a != b) {
        *detail = json{{"method", "pairing"}, {"functional", i}, {"lhs_pairing", to_string(a)},
                       {"rhs_pairing", to_string(b)}};
        return Verdict::Inconclusive;
      }
    }
  } catch (const TruncationError& e) {
    *detail = json{{"truncation", e.what()}};
    return Verdict::Inconclusive;
  }
  return Verdict::Pass;
}

void suite_pairing_duality(Ctx& ctx) {
  const VOA& A = ctx.A;
  const int D = ctx.cutoff(9), M = ctx.margin(4);
  const Range mr = ctx.m_range({0, 1}), nr = ctx.n_range({0, 1}), pr = ctx.p_range({-2, 2});
  const int vmax = std::min(3, ctx.corpus(4)), wmax = ctx.corpus(4);
  for (int m = mr.first; m <= mr.second; ++m)
    for (int n = nr.first; n <= nr.second; ++n) {
      Tally tl, tr, tp;
      const auto start = Clock::now();
      for (const BasisKey vk : A.keys_upto(vmax))
        for (const BasisKey wk : A.keys_upto(wmax)) {
          const GradedVector v(vk), w(wk);
          const GradedVector th = A.theta(v);
          struct Side {
            Tally* t;
            long p;
            GradedVector dual, primal;
          };
          std::vector<Side> sides;
          sides.push_back({&tl, 0, bullet_left(A, v, w, m, n), bar_star_lower(A, v, w, m, n)});
          sides.push_back({&tr, 0, bullet_right(A, v, w, m, n), bar_star_upper(A, th, w, m, n)});
          for (int p = pr.first; p <= pr.second; ++p)
            sides.push_back({&tp, p, yr_shifted_mode(A, v, p, w, m, n), bracket_star(A, th, p, w, m, n)});
          for (const Side& s : sides) {
            if (s.dual == s.primal) {
              s.t->pass();
              s.t->extra["identical_vectors"] = s.t->extra.value("identical_vectors", 0L) + 1;
              continue;
            }
            json detail;
            int used = M;
            const Verdict verdict = with_margin_retry(
                M, ctx.cfg.margin_ceiling,
                [&](int mg) {
                  return compare_pairings(*ctx.store.get({SpanKind::ODagger, m, n, D, mg}), D, s.dual, s.primal,
                                          &detail);
                },
                &used);
            if (verdict == Verdict::Pass && detail.is_object() && detail.value("method", "") == "span membership")
              s.t->extra["certified_above_cutoff"] = s.t->extra.value("certified_above_cutoff", 0L) + 1;
            s.t->add(verdict, [&] {
              return json{{"v", ctx.fmt(v)}, {"w", ctx.fmt(w)}, {"p", s.p}, {"dual_side", ctx.fmt(s.dual)},
                          {"primal_side", ctx.fmt(s.primal)}, {"detail", detail}, {"margin", used}};
            });
          }
        }
      const std::size_t nf = vacuum_basis(ctx, m, n, D, M).size();
      for (Tally* t : {&tl, &tr, &tp}) {
        t->extra["vacuum_basis_size"] = nf;
        t->extra["cutoff"] = D;
      }
      const std::string base = "pairing-duality/" + ctx.tag() + "/" + mn_tag(m, n);
      record(ctx, base + "/left", kRegistry[5].anchor, tl, start);
      record(ctx, base + "/right", kRegistry[5].anchor, tr, start);
      record(ctx, base + "/shifted", kRegistry[5].anchor, tp, start);
    }
}

void suite_zero_mode_difference(Ctx& ctx) {
  const VOA& A = ctx.A;
  const int D = ctx.cutoff(9), M = ctx.margin(4);
  const Range mr = ctx.m_range({0, 1}), nr = ctx.n_range({0, 1});
  for (int m = mr.first; m <= mr.second; ++m)
    for (int n = nr.first; n <= nr.second; ++n) {
      const auto start = Clock::now();
      Tally t;
      for (const BasisKey wk : A.keys_upto(ctx.corpus(4))) {
        const GradedVector w(wk);
        const auto [left, right] = lr_zero_modes(A, w, m, n);
        const GradedVector dual = right - left;
        const GradedVector primal = shifted_translation(A, w, 0);
        json detail;
        int used = M;
        const Verdict v = with_margin_retry(
            M, ctx.cfg.margin_ceiling,
            [&](int mg) {
              return compare_pairings(*ctx.store.get({SpanKind::ODagger, m, n, D, mg}), D, dual, primal, &detail);
            },
            &used);
        t.add(v, [&] {
          return json{{"w", ctx.fmt(w)}, {"dual_side", ctx.fmt(dual)}, {"primal_side", ctx.fmt(primal)},
                      {"detail", detail}, {"margin", used}};
        });
      }
      t.extra["vacuum_basis_size"] = vacuum_basis(ctx, m, n, D, M).size();
      record(ctx, "zero-mode-difference/" + ctx.tag() + "/" + mn_tag(m, n), kRegistry[6].anchor, t, start);
    }
}

void suite_shifted_stability(Ctx& ctx) {
  const VOA& A = ctx.A;
  const int D = ctx.cutoff(7), M = ctx.margin(6);
  const int source_cut = std::max(0, D - 2);
  const Range mr = ctx.m_range({0, 1}), nr = ctx.n_range({0, 1}), pr = ctx.p_range({-2, 2});
  const auto us = A.keys_upto(std::min(3, ctx.corpus(3)));
  for (const SpanKind kind : {SpanKind::ODagger, SpanKind::OPrime})
    for (int m = mr.first; m <= mr.second; ++m)
      for (int n = nr.first; n <= nr.second; ++n) {
        const auto start = Clock::now();
        Tally t;
        const auto gens = span_generators(A, {kind, m, n, source_cut, 0}, !ctx.cfg.serial);
        for (int p = pr.first; p <= pr.second; ++p) {
          const int target = n + p;
          if (target < 0) continue;  // target quotient is zero
          auto make = [&](int mg) { return ctx.store.get({kind, m, target, D, mg}); };
          for (const BasisKey uk : us) {
            const GradedVector u(uk);
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
              const GradedVector img = bracket_star(A, u, p, gens[gi], m, n);
              if (img.is_zero()) {
                t.pass();
                continue;
              }
              int used = M;
              const Verdict v = span_membership(ctx, make, img, M, &used);
              t.add(v, [&] {
                return json{{"u", ctx.fmt(u)}, {"p", p}, {"generator", ctx.fmt(gens[gi])}, {"image", ctx.fmt(img)},
                            {"margin", used}};
              });
            }
          }
        }
        t.extra["generators"] = gens.size();
        t.extra["source_cutoff"] = source_cut;
        record(ctx, "shifted-stability/" + span_kind_name(kind) + "/" + mn_tag(m, n), kRegistry[7].anchor, t, start);
      }
}

void suite_generation(Ctx& ctx) {
  const VOA& A = ctx.A;
  const int D = ctx.cutoff(6), M = ctx.margin(6);
  const Range mr = ctx.m_range({0, 1}), nr = ctx.n_range({0, 4});
  const auto us = A.keys_upto(ctx.corpus(4));
  for (int m = mr.first; m <= mr.second; ++m)
    for (int n = std::max(m, nr.first); n <= nr.second; ++n) {
      const auto start = Clock::now();
      Tally t;
      auto make = [&](int mg) { return ctx.store.get({SpanKind::OPrime, m, n, D, mg}); };
      for (const BasisKey uk : us) {
        const GradedVector u(uk);
        const GradedVector diff = bracket_star(A, u, n - m, A.vacuum(), m, m) - u;
        int used = M;
        const Verdict v = diff.is_zero() ? Verdict::Pass : span_membership(ctx, make, diff, M, &used);
        t.add(v, [&] { return json{{"u", ctx.fmt(u)}, {"difference", ctx.fmt(diff)}, {"margin", used}}; });
      }
      record(ctx, "generation/" + mn_tag(m, n), kRegistry[8].anchor, t, start);
    }
}

void suite_universal_map(Ctx& ctx) {
  const VOA& A = ctx.A;
  const int D = ctx.cutoff(6), M = ctx.margin(6);
  const int m = ctx.m_range({0, 0}).first;
  const Range nr = ctx.n_range({0, 3});
  const int corpus = std::min(3, ctx.corpus(3));
  const AmModule U = omega_module(A, m, D, D + M);
  const auto keys = A.keys_upto(corpus);
  const std::vector<GradedVector> mode_vectors = {A.generator(), A.omega()};
  for (int n = nr.first; n <= nr.second; ++n) {
    const auto start = Clock::now();
    Tally kill, equiv, balance, inter, inside;
    const Subspace omega_target = omega_n(A, n, D + n, D + n + M);
    for (const GradedVector& g : span_generators(A, {SpanKind::OPrime, m, n, D, 0}, !ctx.cfg.serial))
      for (const GradedVector& u : U.basis) {
        const GradedVector val = F_nm(A, g, u, m, n);
        kill.add(val.is_zero() ? Verdict::Pass : Verdict::Fail,
                 [&] { return json{{"generator", ctx.fmt(g)}, {"u", ctx.fmt(u)}, {"value", ctx.fmt(val)}}; });
      }
    for (const BasisKey vk : keys)
      for (const GradedVector& w : U.basis) {
        const GradedVector v(vk);
        const GradedVector fv = F_nm(A, v, w, m, n);
        Verdict in = Verdict::Pass;
        try {
          in = omega_target.contains(fv) ? Verdict::Pass : Verdict::Fail;
        } catch (const TruncationError&) {
          in = Verdict::Inconclusive;
        }
        inside.add(in, [&] { return json{{"v", ctx.fmt(v)}, {"value", ctx.fmt(fv)}}; });
        for (const BasisKey uk : keys) {
          const GradedVector u(uk);
          const GradedVector lhs = dot_action(A, u, fv);
          const GradedVector rhs = F_nm(A, bar_star_upper(A, u, v, m, n), w, m, n);
          equiv.add(lhs == rhs ? Verdict::Pass : Verdict::Fail, [&] {
            return json{{"u", ctx.fmt(u)}, {"v", ctx.fmt(v)}, {"lhs", ctx.fmt(lhs)}, {"rhs", ctx.fmt(rhs)}};
          });
          const GradedVector bl = F_nm(A, bar_star_lower(A, u, v, m, n), w, m, n);
          const GradedVector br = F_nm(A, v, dot_action(A, u, w), m, n);
          balance.add(bl == br ? Verdict::Pass : Verdict::Fail, [&] {
            return json{{"u", ctx.fmt(u)}, {"v", ctx.fmt(v)}, {"lhs", ctx.fmt(bl)}, {"rhs", ctx.fmt(br)}};
          });
        }
        for (const GradedVector& x : mode_vectors)
          for (long k = -2; k <= 2; ++k) {
            const long p = x.max_weight() - 1 - k;
            const GradedVector lhs = A.mode(x, k, fv);
            const GradedVector rhs =
                n + p < 0 ? GradedVector() : F_nm(A, bracket_star(A, x, p, v, m, n), w, m, static_cast<int>(n + p));
            inter.add(lhs == rhs ? Verdict::Pass : Verdict::Fail, [&] {
              return json{{"mode_of", ctx.fmt(x)}, {"k", k}, {"v", ctx.fmt(v)}, {"lhs", ctx.fmt(lhs)},
                          {"rhs", ctx.fmt(rhs)}};
            });
          }
      }
    const std::string base = "universal-map/" + mn_tag(m, n);
    record(ctx, base + "/kills-primed-generators", kRegistry[9].anchor, kill, start);
    record(ctx, base + "/lands-in-vacuum-space", kRegistry[9].anchor, inside, start);
    record(ctx, base + "/left-equivariance", kRegistry[9].anchor, equiv, start);
    record(ctx, base + "/right-balance", kRegistry[9].anchor, balance, start);
    record(ctx, base + "/intertwines-modes", kRegistry[9].anchor, inter, start);
  }
  {
    const auto start = Clock::now();
    Tally t;
    // Relations from every quotient basis weight, so that a (x) u ~ 1 (x) a.u is available for all a.
    DiamondFamily fam(A, ctx.store, m, m, D, M);
    const InducedModule ind = induce(fam, U, D);
    const InducedPiece& top = ind.pieces.at(m);
    t.add(top.dim == U.dim() ? Verdict::Pass : Verdict::Fail,
          [&] { return json{{"piece_dim", top.dim}, {"module_dim", U.dim()}}; });
    t.extra["piece_dim"] = top.dim;
    t.extra["tensor_dim"] = top.tensor_dim;
    t.extra["relations"] = top.relations;
    t.extra["skipped_relations"] = top.skipped;
    record(ctx, "universal-map/induced-top-piece", kRegistry[9].anchor, t, start);
  }
}

void suite_diamond_module(Ctx& ctx) {
  const VOA& A = ctx.A;
  const int D = ctx.cutoff(6), M = ctx.margin(6);
  const Range mr = ctx.m_range({0, 1}), pr = ctx.p_range({-2, 2});
  const int max_deg = ctx.n_range({0, 3}).second;
  const int xi_wt = std::max(0, std::min(2, D - 4));
  std::vector<GradedVector> gens = {A.generator()};
  if (A.kind() == VoaKind::FreeBoson) gens.push_back(A.omega());
  for (int m = mr.first; m <= mr.second; ++m) {
    const auto start = Clock::now();
    Tally comm;
    for (int n = 0; n <= max_deg; ++n)
      for (const GradedVector& u : gens)
        for (const GradedVector& v : gens)
          for (int p = pr.first; p <= pr.second; ++p)
            for (int q = pr.first; q <= pr.second; ++q) {
              const int top = n + p + q;
              if (top < 0 || top > max_deg || n + p > max_deg || n + q > max_deg) continue;
              const long wu = u.max_weight(), wv = v.max_weight();
              const long a = wu - 1 - p, b = wv - 1 - q;
              for (const BasisKey xk : DiamondFamily(A, ctx.store, m, max_deg, D, M).piece_basis(n)) {
                if (xk.wt > xi_wt) continue;
                const GradedVector xi(xk);
                GradedVector diff;
                int used = M;
                const Verdict verdict = with_margin_retry(
                    M, ctx.cfg.margin_ceiling,
                    [&](int mg) {
                      try {
                        DiamondFamily fam(A, ctx.store, m, max_deg, D, mg);
                        GradedVector lhs = fam.vp_action(u, p, fam.vp_action(v, q, xi, n), n + q);
                        lhs -= fam.vp_action(v, q, fam.vp_action(u, p, xi, n), n + p);
                        GradedVector rhs;
                        for (long i = 0; i <= wu + wv; ++i) {
                          const GradedVector ui_v = A.mode(u, i, v);
                          if (ui_v.is_zero()) continue;
                          rhs.axpy(binom_q(a, i), fam.vp_action(ui_v, p + q, xi, n));
                        }
                        diff = fam.reduce(top, lhs - rhs);
                        return diff.is_zero() ? Verdict::Pass : Verdict::Inconclusive;
                      } catch (const TruncationError&) {
                        return Verdict::Inconclusive;
                      }
                    },
                    &used);
                comm.add(verdict, [&] {
                  return json{{"u", ctx.fmt(u)}, {"v", ctx.fmt(v)}, {"p", p}, {"q", q}, {"mode_indices", {a, b}},
                              {"xi", ctx.fmt(xi)}, {"degree", n}, {"residual", ctx.fmt(diff)}, {"margin", used}};
                });
              }
            }
    record(ctx, "diamond-module/commutator/m=" + std::to_string(m), kRegistry[10].anchor, comm, start);

    const auto start2 = Clock::now();
    Tally pairing;
    for (int n = 0; n <= std::min(max_deg, 1); ++n) {
      for (const GradedVector& v : gens)
        for (const BasisKey wk : A.keys_upto(2))
          for (int p = pr.first; p <= pr.second; ++p) {
            const GradedVector w(wk);
            const long t = -v.max_weight() - p;
            const GradedVector dual = yr_deformed_coeff(A, v, t, w, m, n);
            const GradedVector primal = bracket_star(A, A.theta(v), p, w, m, n);
            json detail;
            int used = M;
            const Verdict verdict = dual == primal
                                        ? Verdict::Pass
                                        : with_margin_retry(
                                              M, ctx.cfg.margin_ceiling,
                                              [&](int mg) {
                                                return compare_pairings(
                                                    *ctx.store.get({SpanKind::OPrime, m, n, D, mg}), D, dual,
                                                    primal, &detail);
                                              },
                                              &used);
            pairing.add(verdict, [&] {
              return json{{"v", ctx.fmt(v)}, {"w", ctx.fmt(w)}, {"p", p}, {"n", n}, {"dual_side", ctx.fmt(dual)},
                          {"primal_side", ctx.fmt(primal)}, {"detail", detail}, {"margin", used}};
            });
          }
    }
    record(ctx, "diamond-module/contragredient-pairing/m=" + std::to_string(m), kRegistry[10].anchor, pairing,
           start2);
  }
}

void suite_deformation_invariance(Ctx& ctx) {
  const VOA& A = ctx.A;
  const int D = ctx.cutoff(6), M = ctx.margin(6);
  const Range nr = ctx.n_range({0, 2});
  for (int n = nr.first; n <= nr.second; ++n) {
    const auto start = Clock::now();
    Tally t;
    const Subspace base = omega_n(A, n, D, D + M);
    for (const long z0 : {1L, -1L}) {
      const Subspace def = omega_n(A, n, D, D + M, Q(z0));
      const bool same = base.rank() == def.rank() && base.contains_subspace(def) && def.contains_subspace(base);
      t.add(same ? Verdict::Pass : Verdict::Fail,
            [&] { return json{{"z0", z0}, {"dim_undeformed", base.rank()}, {"dim_deformed", def.rank()}}; });
    }
    t.extra["dimension"] = base.rank();
    record(ctx, "deformation-invariance/" + ctx.tag() + "/n=" + std::to_string(n), kRegistry[11].anchor, t, start);
  }
  if (A.kind() == VoaKind::FreeBoson) {
    const auto start = Clock::now();
    Tally t;
    const Subspace o0 = omega_n(A, 0, D, D + M), o1 = omega_n(A, 1, D, D + M);
    Subspace e0(A.grading(), D), e1(A.grading(), D);
    e0.insert(A.vacuum());
    e1.insert(A.vacuum());
    e1.insert(A.generator());
    for (const auto& [got, want, name] :
         {std::tuple{&o0, &e0, "omega_0"}, std::tuple{&o1, &e1, "omega_1"}}) {
      const bool ok = got->rank() == want->rank() && got->contains_subspace(*want);
      t.add(ok ? Verdict::Pass : Verdict::Fail, [&] {
        json rows = json::array();
        for (const auto& r : got->rows()) rows.push_back(ctx.fmt(r));
        return json{{"space", name}, {"computed_basis", rows}};
      });
    }
    record(ctx, "deformation-invariance/small-vacuum-spaces", kRegistry[11].anchor, t, start);
  }
}

void suite_oracle_equivalence(Ctx& ctx) {
  const VOA& A = ctx.A;
  const BruteForce bf(A);
  const int total = ctx.corpus(5);
  const auto start = Clock::now();
  Tally t;
  for (const BasisKey vk : A.keys_upto(total))
    for (const BasisKey wk : A.keys_upto(total - vk.wt))
      for (long k = -static_cast<long>(total) - 1; k <= static_cast<long>(vk.wt + wk.wt); ++k) {
        const GradedVector engine = A.mode(vk, k, wk);
        const GradedVector oracle = bf.mode(vk, k, wk);
        t.add(engine == oracle ? Verdict::Pass : Verdict::Fail, [&] {
          return json{{"v", A.format_monomial(vk)}, {"k", k}, {"w", A.format_monomial(wk)},
                      {"engine", ctx.fmt(engine)}, {"oracle", ctx.fmt(oracle)}};
        });
      }
  record(ctx, "oracle-equivalence/" + ctx.tag(), kRegistry[12].anchor, t, start);
}

using SuiteFn = void (*)(Ctx&);
const std::map<std::string, SuiteFn>& suite_functions() {
  static const std::map<std::string, SuiteFn> fns = {
      {"binomial-identity", suite_binomial_identity},
      {"vandermonde", suite_vandermonde},
      {"left-right-difference", suite_left_right_difference},
      {"zhu-algebra", suite_zhu_algebra},
      {"vacuum-duality", suite_vacuum_duality},
      {"pairing-duality", suite_pairing_duality},
      {"zero-mode-difference", suite_zero_mode_difference},
      {"shifted-stability", suite_shifted_stability},
      {"generation", suite_generation},
      {"universal-map", suite_universal_map},
      {"diamond-module", suite_diamond_module},
      {"deformation-invariance", suite_deformation_invariance},
      {"oracle-equivalence", suite_oracle_equivalence},
  };
  return fns;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() { return kRegistry; }

bool known_suite(const std::string& name) { return name == "all" || name == "none" || suite_functions().count(name); }

json config_json(const SuiteConfig& cfg) {
  json j;
  j["voa"] = kind_name(cfg.kind);
  j["c"] = to_string(cfg.central_charge);
  j["suite"] = cfg.suite;
  j["margin_ceiling"] = cfg.margin_ceiling;
  auto opt = [&](const char* key, const std::optional<int>& v) { j[key] = v ? json(*v) : json(nullptr); };
  auto rng = [&](const char* key, const std::optional<Range>& r) {
    j[key] = r ? json::array({r->first, r->second}) : json(nullptr);
  };
  opt("cutoff", cfg.cutoff);
  opt("margin", cfg.margin);
  opt("corpus_wt", cfg.corpus_wt);
  rng("m", cfg.m_range);
  rng("n", cfg.n_range);
  rng("p", cfg.p_range);
  j["inject_fail"] = cfg.inject_fail;
  j["serial"] = cfg.serial;
  return j;
}

Report run_suite(const SuiteConfig& cfg) {
  if (!known_suite(cfg.suite)) throw UsageError("unknown suite '" + cfg.suite + "'");
  if (cfg.cutoff && *cfg.cutoff < 0) throw UsageError("cutoff must be nonnegative");
  if (cfg.margin && *cfg.margin < 0) throw UsageError("margin must be nonnegative");
  if (cfg.cutoff && cfg.corpus_wt && *cfg.corpus_wt > *cfg.cutoff)
    throw UsageError("corpus weight bound exceeds the cutoff");
  for (const auto* r : {&cfg.m_range, &cfg.n_range})
    if (*r && ((*r)->first < 0 || (*r)->first > (*r)->second)) throw UsageError("m and n ranges must be a..b, 0 <= a <= b");
  if (cfg.p_range && cfg.p_range->first > cfg.p_range->second) throw UsageError("p range must be a..b with a <= b");

  const int ambient = std::max(cfg.cutoff.value_or(10), 10) + std::max(cfg.margin_ceiling, cfg.margin.value_or(6)) + 4;
  const VOA A(cfg.kind, cfg.central_charge, ambient);
  SpanStore store(A);
  Report rep;
  rep.config = config_json(cfg);
  Ctx ctx{cfg, A, store, rep.records};
  if (cfg.suite == "none") return rep;
  for (const SuiteInfo& s : kRegistry)
    if (cfg.suite == "all" || cfg.suite == s.name) suite_functions().at(s.name)(ctx);
  return rep;
}

json report_json(const Report& r) {
  json j;
  j["engine"] = {{"name", "voakit"}, {"version", "0.1.0"}};
  j["config"] = r.config;
  json recs = json::array();
  for (const CheckRecord& c : r.records)
    recs.push_back({{"id", c.id},
                    {"anchor", c.anchor},
                    {"verdict", verdict_name(c.verdict)},
                    {"witness", c.witness},
                    {"seconds", c.seconds}});
  j["checks"] = recs;
  j["summary"] = {{"total", r.records.size()},
                  {"pass", r.count(Verdict::Pass)},
                  {"fail", r.count(Verdict::Fail)},
                  {"inconclusive", r.count(Verdict::Inconclusive)},
                  {"exit_code", r.exit_code()}};
  return j;
}

void emit_report(const Report& r, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write report to " + path);
  f << report_json(r).dump(2) << "\n";
  if (!f) throw std::runtime_error("error writing report to " + path);
}

}  // namespace voakit
