#include "voakit/brute_force.hpp"

#include <algorithm>

namespace voakit {

namespace {

long total_weight(const Partition& p, std::size_t from) {
  long s = 0;
  for (std::size_t i = from; i < p.size(); ++i) s += p[i];
  return s;
}

}  // namespace

// Reduces L(m_1)...L(m_k)|0> to the PBW basis; modes are Virasoro indices.
GradedVector BruteForce::word(std::vector<long> modes) const {
  if (modes.empty()) return voa_.vacuum();
  if (modes.back() >= -1) return {};
  for (std::size_t i = 0; i + 1 < modes.size(); ++i) {
    const long a = modes[i];
    const long b = modes[i + 1];
    if (a <= b) continue;
    // L(a)L(b) = L(b)L(a) + (a-b)L(a+b) + (a^3-a)/12 c delta_{a+b,0}
    std::vector<long> swapped = modes;
    std::swap(swapped[i], swapped[i + 1]);
    GradedVector out = word(swapped);
    std::vector<long> merged = modes;
    merged[i] = a + b;
    merged.erase(merged.begin() + static_cast<long>(i) + 1);
    out.axpy(Q(a - b), word(merged));
    if (a + b == 0) {
      std::vector<long> dropped = modes;
      dropped.erase(dropped.begin() + static_cast<long>(i), dropped.begin() + static_cast<long>(i) + 2);
      out.axpy(frac(a * a * a - a, 12) * voa_.central_charge(), word(dropped));
    }
    return out;
  }
  Partition p;
  for (long m : modes) p.push_back(static_cast<int>(-m));
  return GradedVector(voa_.key_of(p));
}

GradedVector BruteForce::gen(long r, const GradedVector& w) const {
  GradedVector out;
  for (const auto& [key, c] : w) {
    const Partition& p = voa_.monomial(key);
    if (voa_.kind() == VoaKind::FreeBoson) {
      if (r < 0) {
        Partition q = p;
        q.push_back(static_cast<int>(-r));
        std::sort(q.rbegin(), q.rend());
        out.add(voa_.key_of(q), c);
      } else if (r > 0) {
        // a(r) commutes past each a(-n) with n != r and contracts with n == r.
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (p[i] != r) continue;
          Partition q = p;
          q.erase(q.begin() + static_cast<long>(i));
          out.add(voa_.key_of(q), c * r);
        }
      }
    } else {
      std::vector<long> modes{r - 1};
      for (int n : p) modes.push_back(-n);
      out.axpy(c, word(modes));
    }
  }
  return out;
}

// Mode q of :A_i(x) :A_{i+1}(x) ... :: applied to w, where A_j is the
// divided derivative of order parts[j] - wt(generator) of the generating field.
GradedVector BruteForce::normal_ordered(const Partition& parts, std::size_t i, long q,
                                        const GradedVector& w) const {
  if (i == parts.size()) return q == -1 ? w : GradedVector();
  if (w.is_zero()) return {};
  const long gw = voa_.generator_weight();
  const long d = parts[i] - gw;
  const long rest_wt = total_weight(parts, i + 1);
  const long wmax = w.max_weight();
  GradedVector out;
  // Creation half: g_r with r < 0 on the left.
  for (long r = q - d - rest_wt - wmax; r <= -1 - d; ++r) {
    Z coef = binom(-r - 1, d);
    if (coef == 0) continue;
    GradedVector inner = normal_ordered(parts, i + 1, q - r - 1 - d, w);
    if (inner.is_zero()) continue;
    out.axpy(Q(coef), gen(r, inner));
  }
  // Annihilation half: g_r with r >= 0 acts first.
  for (long r = 0; r <= gw + wmax - 1; ++r) {
    Z coef = binom(-r - 1, d);
    GradedVector gw_r = gen(r, w);
    if (gw_r.is_zero()) continue;
    out.axpy(Q(coef), normal_ordered(parts, i + 1, q - r - 1 - d, gw_r));
  }
  return out;
}

GradedVector BruteForce::mode(BasisKey v, long k, BasisKey w) const {
  if (static_cast<long>(v.wt) + w.wt - k - 1 < 0) return {};
  return normal_ordered(voa_.monomial(v), 0, k, GradedVector(w));
}

GradedVector BruteForce::mode(const GradedVector& v, long k, const GradedVector& w) const {
  GradedVector out;
  for (const auto& [kv, cv] : v)
    for (const auto& [kw, cw] : w) out.axpy(cv * cw, mode(kv, k, kw));
  return out;
}

}  // namespace voakit
