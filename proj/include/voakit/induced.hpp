#pragma once

#include <memory>
#include <vector>

#include "voakit/spans.hpp"
#include "voakit/subspace.hpp"
#include "voakit/voa.hpp"

namespace voakit {

// Cutoff models of the quotients W / O'_{n,m}(W), n = 0..n_max, with W = V,
// all built with the same (D, margin).
class DiamondFamily {
 public:
  DiamondFamily(const VOA& A, SpanStore& store, int m, int n_max, int D, int margin);

  const VOA& voa() const { return A_; }
  int m() const { return m_; }
  int n_max() const { return n_max_; }
  int cutoff() const { return D_; }
  int margin() const { return margin_; }

  // Primed span at degree n; the whole window for n < 0.
  std::shared_ptr<const Subspace> span(int n) const;
  // Canonical representative of w in degree n (zero for n < 0).
  GradedVector reduce(int n, const GradedVector& w) const;
  bool equivalent(int n, const GradedVector& a, const GradedVector& b) const;
  // Basis of the degree-n piece: non-pivot basis vectors of weight <= D.
  std::vector<BasisKey> piece_basis(int n) const;

  // v[p] on the class of w in degree n, as a representative in degree n + p.
  GradedVector vp_action(const GradedVector& v, long p, const GradedVector& w, int n) const;
  // v[p] for inhomogeneous v through its weight pieces; v_k = v[wt v - 1 - k].
  GradedVector mode_action(const GradedVector& v, long k, const GradedVector& w, int n) const;

 private:
  const VOA& A_;
  SpanStore& store_;
  int m_, n_max_, D_, margin_;
};

// Finite-dimensional A_m(V)-module realized inside W = V, with psi the inclusion.
struct AmModule {
  int m = 0;
  Subspace span;                     // psi(U) inside W
  std::vector<GradedVector> basis;   // rows of span
  int dim() const { return static_cast<int>(basis.size()); }
};

// U = Omega_m(V) at cutoff D with the dot action.
AmModule omega_module(const VOA& A, int m, int D, int vbound);
// Coordinates of a . basis[j] in the module basis; throws if not closed.
std::vector<Q> module_action(const VOA& A, const AmModule& U, const GradedVector& a, int j);

// Element of A_{n,m}(V) (x) U as a list of (representative, module coordinates).
struct InducedPiece {
  int n = 0;
  std::vector<BasisKey> quotient_basis;
  long tensor_dim = 0;
  long relations = 0;
  long skipped = 0;  // relations needing weights above the cutoff
  long dim = 0;
};

struct InducedModule {
  std::vector<InducedPiece> pieces;
};

// Degree-n pieces of the induced module, using the corpus of basis vectors of
// weight <= corpus_wt as A_m(V) representatives for the balancing relations.
InducedModule induce(const DiamondFamily& fam, const AmModule& U, int corpus_wt);

// F_{n,m}(v, u) = Res_x x^{m-n-1} Y(x^{L(0)}v, x) psi(u).
GradedVector F_nm(const VOA& A, const GradedVector& v, const GradedVector& psi_u, int m, int n);

}  // namespace voakit
