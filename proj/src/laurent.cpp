#include "voakit/laurent.hpp"

#include <algorithm>

namespace voakit {

ScalarSeries binom_expand(long r, long order) {
  if (order < 0) throw std::invalid_argument("binom_expand needs order >= 0");
  bool exact = r >= 0 && order >= r;
  ScalarSeries s(exact ? ScalarSeries::kExact : order);
  long top = exact ? r : order;
  for (long j = 0; j <= top; ++j) s.add(j, binom_q(r, j));
  return s;
}

std::vector<BinomialTerm> binom_expand_two(long r, const Q& a, long order) {
  if (a == 0) throw std::invalid_argument("binom_expand_two needs a nonzero first coefficient");
  std::vector<BinomialTerm> out;
  long top = (r >= 0) ? std::min(r, order) : order;
  for (long j = 0; j <= top; ++j) {
    Q c = binom_q(r, j);
    long p = r - j;
    Q ap = 1;
    mpz_pow_ui(ap.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(std::labs(p)));
    mpz_pow_ui(ap.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(std::labs(p)));
    ap.canonicalize();
    if (p < 0) ap = 1 / ap;
    out.push_back(BinomialTerm{c * ap, p, j});
  }
  return out;
}

namespace {

long product_order(long la, long oa, long lb, long ob) {
  long o = ScalarSeries::kExact;
  if (ob != ScalarSeries::kExact) o = std::min(o, la + ob);
  if (oa != ScalarSeries::kExact) o = std::min(o, lb + oa);
  return o;
}

template <class C>
Laurent<C> mul_impl(const ScalarSeries& a, const Laurent<C>& b) {
  if (a.is_zero() || b.is_zero()) {
    long o = ScalarSeries::kExact;
    if (a.truncated() && !b.is_zero()) o = std::min(o, a.order() + b.lowest());
    if (b.truncated() && !a.is_zero()) o = std::min(o, b.order() + a.lowest());
    if (a.is_zero() && b.is_zero()) o = std::min(a.order(), b.order());
    return Laurent<C>(o);
  }
  Laurent<C> out(product_order(a.lowest(), a.order(), b.lowest(), b.order()));
  for (const auto& [ea, ca] : a.coeffs())
    for (const auto& [eb, cb] : b.coeffs()) {
      if (ea + eb > out.order()) break;
      C term = cb;
      term *= ca;
      out.add(ea + eb, term);
    }
  return out;
}

}  // namespace

ScalarSeries multiply(const ScalarSeries& a, const ScalarSeries& b) { return mul_impl(a, b); }
VectorSeries multiply(const ScalarSeries& a, const VectorSeries& b) { return mul_impl(a, b); }
VectorSeries multiply(const VectorSeries&, const VectorSeries&) {
  throw std::invalid_argument("product of two vector-valued series is not supported");
}

Q residue(const ScalarSeries& s) { return s.coeff(-1); }
GradedVector residue(const VectorSeries& s) { return s.coeff(-1); }

}  // namespace voakit
