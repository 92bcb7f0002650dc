#include "voakit/induced.hpp"

#include <stdexcept>

#include "voakit/errors.hpp"
#include "voakit/products.hpp"
#include "voakit/vacuum.hpp"

namespace voakit {

DiamondFamily::DiamondFamily(const VOA& A, SpanStore& store, int m, int n_max, int D, int margin)
    : A_(A), store_(store), m_(m), n_max_(n_max), D_(D), margin_(margin) {}

std::shared_ptr<const Subspace> DiamondFamily::span(int n) const {
  return store_.get({SpanKind::OPrime, m_, n < 0 ? -1 : n, D_, margin_});
}

GradedVector DiamondFamily::reduce(int n, const GradedVector& w) const {
  if (n < 0) return {};
  return span(n)->reduce(w);
}

bool DiamondFamily::equivalent(int n, const GradedVector& a, const GradedVector& b) const {
  if (n < 0) return true;
  return span(n)->contains(a - b);
}

std::vector<BasisKey> DiamondFamily::piece_basis(int n) const {
  if (n < 0) return {};
  std::vector<BasisKey> out;
  for (const BasisKey& k : span(n)->free_keys())
    if (k.wt <= D_) out.push_back(k);
  return out;
}

GradedVector DiamondFamily::vp_action(const GradedVector& v, long p, const GradedVector& w, int n) const {
  const long target = n + p;
  if (target < 0 || n < 0) return {};
  return reduce(static_cast<int>(target), bracket_star(A_, v, p, w, m_, n));
}

GradedVector DiamondFamily::mode_action(const GradedVector& v, long k, const GradedVector& w, int n) const {
  GradedVector out;
  for (const auto& [wt, piece] : v.parts()) out += vp_action(piece, wt - 1 - k, w, n);
  return out;
}

AmModule omega_module(const VOA& A, int m, int D, int vbound) {
  AmModule U;
  U.m = m;
  U.span = omega_n(A, m, D, vbound);
  U.basis = U.span.rows();
  return U;
}

std::vector<Q> module_action(const VOA& A, const AmModule& U, const GradedVector& a, int j) {
  GradedVector img = dot_action(A, a, U.basis.at(j));
  if (!img.is_zero() && img.max_weight() > U.span.cutoff())
    throw TruncationError("module action leaves the cutoff");
  Membership mem = U.span.member(img);
  if (!mem.member) throw std::runtime_error("module action does not preserve U");
  return mem.coords;
}

InducedModule induce(const DiamondFamily& fam, const AmModule& U, int corpus_wt) {
  const VOA& A = fam.voa();
  InducedModule out;
  const int du = U.dim();
  for (int n = 0; n <= fam.n_max(); ++n) {
    InducedPiece piece;
    piece.n = n;
    piece.quotient_basis = fam.piece_basis(n);
    const long nq = static_cast<long>(piece.quotient_basis.size());
    piece.tensor_dim = nq * du;
    std::map<BasisKey, long> pos;
    for (long i = 0; i < nq; ++i) pos[piece.quotient_basis[i]] = i;
    Echelon rel;
    for (const BasisKey& sk : A.keys_upto(corpus_wt)) {
      const GradedVector s(sk);
      std::vector<std::vector<Q>> s_on_u(du);
      for (int j = 0; j < du; ++j) s_on_u[j] = module_action(A, U, s, j);
      for (long i = 0; i < nq; ++i) {
        GradedVector right;
        try {
          right = fam.reduce(n, bar_star_lower(A, s, GradedVector(piece.quotient_basis[i]), fam.m(), n));
        } catch (const TruncationError&) {
          ++piece.skipped;
          continue;
        }
        bool inside = true;
        for (const auto& [k, c] : right)
          if (!pos.count(k)) inside = false;
        if (!inside) {
          ++piece.skipped;
          continue;
        }
        for (int j = 0; j < du; ++j) {
          std::map<long, Q> row;
          for (const auto& [k, c] : right) row[pos[k] * du + j] += c;
          for (int l = 0; l < du; ++l) row[i * du + l] -= s_on_u[j][l];
          SparseRow r;
          for (auto& [c, q] : row)
            if (q != 0) r.emplace_back(c, q);
          ++piece.relations;
          rel.insert(std::move(r));
        }
      }
    }
    piece.dim = piece.tensor_dim - static_cast<long>(rel.rank());
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

GradedVector F_nm(const VOA& A, const GradedVector& v, const GradedVector& psi_u, int m, int n) {
  GradedVector out;
  for (const auto& [wt, piece] : v.parts()) out += A.mode(piece, static_cast<long>(wt) + m - n - 1, psi_u);
  return out;
}

}  // namespace voakit
