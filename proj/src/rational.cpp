#include "voakit/rational.hpp"

#include <stdexcept>

namespace voakit {

Z binom(long a, long j) {
  if (j < 0) return 0;
  Z top = a;
  Z out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
  return out;
}

Q binom_q(long a, long j) { return Q(binom(a, j)); }

Q frac(long a, long b) {
  if (b == 0) throw std::domain_error("zero denominator");
  Q q{Z(a), Z(b)};
  q.canonicalize();
  return q;
}

Q factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Z out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Q(out);
}

Q parse_rational(const std::string& text) {
  Q q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

}  // namespace voakit
