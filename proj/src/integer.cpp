#include "symcc/integer.hpp"

#include "symcc/errors.hpp"

namespace symcc {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer gen_binomial(const Integer& a, unsigned long m) {
  Integer num = 1;
  for (unsigned long i = 0; i < m; ++i) num *= a - i;
  return exact_div(num, factorial(m), "gen_binomial");
}

Integer gen_binomial(long a, unsigned long m) { return gen_binomial(Integer(a), m); }

Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (den == 0) throw InternalError(std::string(what) + ": division by zero");
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw InternalError(std::string(what) + ": inexact division " + num.get_str() + " / " +
                        den.get_str());
  }
  return q;
}

}  // namespace symcc
