#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace orthocyc {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when an argument violates a documented precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer ipow(long base, unsigned long e) { return ipow(Integer(base), e); }

// base^e for any integer e; base must be nonzero when e < 0.
inline Rational rpow(const Rational& base, long e) {
  Integer num, den;
  unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), a);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

inline Rational rpow(long base, long e) { return rpow(Rational(base), e); }

// num/den in lowest terms (the two-argument mpq_class constructor does not
// reduce, and unreduced values break comparisons).
inline Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Always "num/den", also for integers.
inline std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw Error("malformed rational '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace orthocyc
