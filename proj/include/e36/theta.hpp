#ifndef E36_THETA_HPP
#define E36_THETA_HPP

#include <optional>
#include <string>
#include <vector>

#include "e36/rational.hpp"

namespace e36 {

/// Univariate polynomial in the formal parameter theta over the rationals.
/// Trailing zero coefficients are trimmed; degree-0 polynomials embed Scalar.
class ThetaPoly {
 public:
  ThetaPoly() = default;
  ThetaPoly(const Scalar& c) { coef_.push_back(c); trim(); }  // NOLINT implicit
  ThetaPoly(long c) : ThetaPoly(Scalar(c)) {}                 // NOLINT implicit
  explicit ThetaPoly(std::vector<Scalar> coef) : coef_(std::move(coef)) { trim(); }

  static ThetaPoly theta() { return ThetaPoly(std::vector<Scalar>{0, 1}); }

  bool is_zero() const { return coef_.empty(); }
  // degree of the zero polynomial is reported as -1
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  bool is_constant() const { return coef_.size() <= 1; }

  Scalar constant_term() const { return coef_.empty() ? Scalar(0) : coef_[0]; }
  Scalar leading() const;
  Scalar coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coef_.size())) ? coef_[k] : Scalar(0);
  }
  const std::vector<Scalar>& coeffs() const { return coef_; }

  Scalar eval(const Scalar& t) const;

  ThetaPoly operator-() const;
  ThetaPoly& operator+=(const ThetaPoly& o);
  ThetaPoly& operator-=(const ThetaPoly& o);
  friend ThetaPoly operator+(ThetaPoly a, const ThetaPoly& b) { return a += b; }
  friend ThetaPoly operator-(ThetaPoly a, const ThetaPoly& b) { return a -= b; }
  friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
  bool operator==(const ThetaPoly& o) const { return coef_ == o.coef_; }
  bool operator!=(const ThetaPoly& o) const { return coef_ != o.coef_; }

  /// Exact quotient; throws if the division leaves a remainder.
  ThetaPoly divexact(const ThetaPoly& d) const;

  /// Divides by the gcd of all coefficients and makes the leading
  /// coefficient positive. Returns the (signed) content taken out.
  Scalar make_primitive();

  std::string to_string(const std::string& var = "theta") const;

 private:
  void trim();
  std::vector<Scalar> coef_;
};

ThetaPoly gcd_poly(ThetaPoly a, ThetaPoly b);

/// All rational roots of p, each listed once. Factors of degree >= 2 with no
/// rational root are appended to residual (primitive, deduplicated) when the
/// pointer is given. Throws only for the zero polynomial.
std::vector<Scalar> rational_roots(const ThetaPoly& p,
                                   std::vector<ThetaPoly>* residual = nullptr);

}  // namespace e36

#endif
