#ifndef E36_RATIONAL_HPP
#define E36_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace e36 {

/// Exact rational scalar. Always kept canonical (lowest terms, positive
/// denominator); every helper below preserves that invariant.
using Scalar = mpq_class;

inline Scalar scalar_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("scalar_of: zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Scalar scalar_from_string(const std::string& text);
std::string scalar_to_string(const Scalar& x);

inline Scalar checked_div(const Scalar& a, const Scalar& b) {
  if (b == 0) throw std::domain_error("division by zero");
  return a / b;
}

/// a(a-1)...(a-n+1); n = 0 gives 1.
Scalar falling_factorial(const Scalar& a, int n);

Scalar binomial(int n, int k);

/// n! / (i! j! (n-i-j)!)
Scalar multinomial3(int n, int i, int j);

}  // namespace e36

#endif
