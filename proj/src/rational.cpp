#include "e36/rational.hpp"

namespace e36 {

Scalar scalar_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Scalar s;
  if (s.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (s.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  s.canonicalize();
  return s;
}

std::string scalar_to_string(const Scalar& x) { return x.get_str(); }

Scalar falling_factorial(const Scalar& a, int n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: negative n");
  Scalar out = 1;
  for (int i = 0; i < n; ++i) out *= a - i;
  return out;
}

Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(z);
}

Scalar multinomial3(int n, int i, int j) {
  if (i < 0 || j < 0 || i + j > n) return 0;
  return binomial(n, i) * binomial(n - i, j);
}

}  // namespace e36
