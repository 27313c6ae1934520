#ifndef SYMCC_INTEGER_HPP
#define SYMCC_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace symcc {

/// Arbitrary-precision signed integer used for every count and coefficient.
using Integer = mpz_class;

Integer factorial(unsigned long n);

/// Binomial coefficient with an arbitrary integer upper index:
/// prod_{i<m} (a - i) / m!. Satisfies C(-a, m) = (-1)^m C(a + m - 1, m).
Integer gen_binomial(const Integer& a, unsigned long m);
Integer gen_binomial(long a, unsigned long m);

/// Exact quotient; throws InternalError when `den` does not divide `num`.
Integer exact_div(const Integer& num, const Integer& den, const char* what);

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer sign_power(unsigned long n) { return (n % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace symcc

#endif  // SYMCC_INTEGER_HPP
