#pragma once

#include <gmpxx.h>

#include <string>

namespace voakit {

// Exact scalars. mpq_class keeps values canonical after every operation.
using Q = mpq_class;
using Z = mpz_class;

// Generalized binomial C(a, j) for integer a and j >= 0; zero for j < 0.
Z binom(long a, long j);
Q binom_q(long a, long j);

Q factorial(long n);

// Canonical a/b.
Q frac(long a, long b);

// (-1)^k as a small integer.
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

Q parse_rational(const std::string& text);
std::string to_string(const Q& q);

}  // namespace voakit
