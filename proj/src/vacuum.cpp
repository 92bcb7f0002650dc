#include "voakit/vacuum.hpp"

#include <map>

#include "voakit/dual.hpp"
#include "voakit/errors.hpp"
#include "voakit/products.hpp"

namespace voakit {

Subspace omega_n(const VOA& A, int n, int D, int vbound, const Q& z0) {
  const std::vector<BasisKey> ws = A.keys_upto(D);
  const std::vector<BasisKey> vs = A.keys_upto(vbound);
  const Grading& g = A.grading();
  const long block = g.dim_upto(D) + 1;
  std::vector<SparseRow> images(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const GradedVector w(ws[i]);
    std::map<long, Q> img;
    for (std::size_t vi = 0; vi < vs.size(); ++vi) {
      const BasisKey& vk = vs[vi];
      const GradedVector v(vk);
      // modes v_j with j >= wt v + n; beyond wt v + wt w - 1 they vanish
      for (long j = vk.wt + n; j <= static_cast<long>(vk.wt) + ws[i].wt - 1; ++j) {
        const long cond = static_cast<long>(vi) * (D + 2) + (j - vk.wt - n);
        GradedVector r = (z0 == 0) ? A.mode(v, j, w) : deformed_mode(A, v, j, w, z0);
        for (const auto& [k, c] : r) img[cond * block + g.col(k)] += c;
      }
    }
    for (auto& [c, q] : img)
      if (q != 0) images[i].emplace_back(c, q);
  }
  Subspace out(g, D);
  out.provenance.family = "omega_n";
  out.provenance.n = n;
  out.provenance.margin = vbound - D;
  for (const auto& kv : kernel_of_images(images)) {
    GradedVector w;
    for (std::size_t i = 0; i < kv.size(); ++i) w.add(ws[i], kv[i]);
    out.insert(w);
  }
  return out;
}

Subspace criterion_span(const VOA& A, int m, int n, int D, int margin) {
  const int ambient = D + margin;
  Subspace s(A.grading(), ambient);
  s.provenance.family = "criterion";
  s.provenance.m = m;
  s.provenance.n = n;
  s.provenance.margin = margin;
  for (const BasisKey& vk : A.keys_upto(ambient)) {
    const GradedVector v(vk);
    for (const BasisKey& wk : A.keys_upto(ambient)) {
      for (long t = -1; regular_coeff_reach(vk.wt, t, wk.wt, m, n) <= ambient; --t) {
        ++s.provenance.generators;
        if (s.try_insert(regular_coeff(A, v, t, GradedVector(wk), m, n))) ++s.provenance.admitted;
      }
    }
  }
  return s;
}

VacuumComparison vacuum_space_mn(const VOA& A, SpanStore& store, int m, int n, int D, int margin) {
  VacuumComparison out;
  out.by_dagger = store.get({SpanKind::ODagger, m, n, D, margin})->restricted(D);
  out.by_criterion = criterion_span(A, m, n, D, margin).restricted(D);
  out.annihilator = out.by_dagger.annihilator();
  out.kernel = out.by_criterion.annihilator();
  out.equal = out.by_dagger.rank() == out.by_criterion.rank() &&
              out.by_dagger.contains_subspace(out.by_criterion) &&
              out.by_criterion.contains_subspace(out.by_dagger);
  return out;
}

Subspace eigen_span(const VOA& A, SpanStore& store, int m, int n, int D, int margin) {
  const int ambient = D + margin;
  Subspace s = *store.get({SpanKind::ODagger, m, n, D, margin});
  s.provenance.family = "eigen";
  for (const BasisKey& wk : A.keys_upto(ambient - 2 - m - n)) {
    const GradedVector w(wk);
    auto [left, right] = lr_zero_modes(A, w, m, n);
    GradedVector g = right - left;
    g.axpy(-(n - m), w);
    ++s.provenance.generators;
    if (s.try_insert(g)) ++s.provenance.admitted;
  }
  return s;
}

GradedPieces associated_graded(const VOA& A, int N, int D, int vbound) {
  GradedPieces out;
  long prev = 0;
  for (int n = 0; n <= N; ++n) {
    out.chain.push_back(omega_n(A, n, D, vbound));
    const long r = static_cast<long>(out.chain.back().rank());
    out.piece_dims.push_back(r - prev);
    prev = r;
  }
  return out;
}

}  // namespace voakit
