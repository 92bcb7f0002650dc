#pragma once

#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "voakit/errors.hpp"
#include "voakit/graded_vector.hpp"
#include "voakit/rational.hpp"

namespace voakit {

// Laurent series in one formal variable, finite below. Terms above `order`
// are unknown when the series is truncated; exact series have order kExact.
template <class C>
class Laurent {
 public:
  static constexpr long kExact = LONG_MAX;

  Laurent() = default;
  explicit Laurent(long order) : order_(order) {}

  static Laurent monomial(long e, C c) {
    Laurent s;
    s.add(e, std::move(c));
    return s;
  }

  void add(long e, const C& c) {
    if (e > order_) return;
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) coeffs_.erase(it);
    }
  }

  C coeff(long e) const {
    if (e > order_) throw TruncationError("coefficient x^" + std::to_string(e) + " above order " +
                                          std::to_string(order_));
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? C() : it->second;
  }

  bool truncated() const { return order_ != kExact; }
  long order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }
  long lowest() const {
    if (coeffs_.empty()) throw std::logic_error("lowest exponent of zero series");
    return coeffs_.begin()->first;
  }
  long highest() const {
    if (coeffs_.empty()) throw std::logic_error("highest exponent of zero series");
    return coeffs_.rbegin()->first;
  }
  const std::map<long, C>& coeffs() const { return coeffs_; }

  // Drops terms above the new order and marks the series truncated there.
  Laurent truncate(long order) const {
    Laurent out(std::min(order, order_));
    for (const auto& [e, c] : coeffs_)
      if (e <= out.order_) out.coeffs_.emplace(e, c);
    return out;
  }

  Laurent shifted(long k) const {
    Laurent out(order_ == kExact ? kExact : order_ + k);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
    return out;
  }

  Laurent derivative() const {
    Laurent out(order_ == kExact ? kExact : order_ - 1);
    for (const auto& [e, c] : coeffs_)
      if (e != 0) out.add(e - 1, Q(e) * c);
    return out;
  }

  Laurent& operator+=(const Laurent& o) {
    order_ = std::min(order_, o.order_);
    for (auto it = coeffs_.upper_bound(order_); it != coeffs_.end();) it = coeffs_.erase(it);
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    Laurent neg = o;
    for (auto& [e, c] : neg.coeffs_) c *= Q(-1);
    return *this += neg;
  }

  bool operator==(const Laurent&) const = default;

 private:
  static bool is_zero_coeff(const C& c) {
    if constexpr (std::is_same_v<C, Q>)
      return c == 0;
    else
      return c.is_zero();
  }

  std::map<long, C> coeffs_;
  long order_ = kExact;
};

using ScalarSeries = Laurent<Q>;
using VectorSeries = Laurent<GradedVector>;

// (1+x)^r expanded in nonnegative powers of x through x^order.
ScalarSeries binom_expand(long r, long order);

// One term c * z^zexp * x^xexp of a two-variable expansion.
struct BinomialTerm {
  Q coeff;
  long zexp;
  long xexp;
};
// (a*z + x)^r expanded in nonnegative powers of x through x^order.
std::vector<BinomialTerm> binom_expand_two(long r, const Q& a, long order);

ScalarSeries multiply(const ScalarSeries& a, const ScalarSeries& b);
VectorSeries multiply(const ScalarSeries& a, const VectorSeries& b);
// Two vector-valued factors have no product here.
VectorSeries multiply(const VectorSeries& a, const VectorSeries& b);

Q residue(const ScalarSeries& s);
GradedVector residue(const VectorSeries& s);

}  // namespace voakit
