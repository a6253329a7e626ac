#ifndef E36_COMMPOLY_HPP
#define E36_COMMPOLY_HPP

#include <array>
#include <compare>
#include <map>
#include <string>

#include "e36/rational.hpp"

namespace e36 {

/// Declared commuting variable sets.
enum class VarSet {
  X5,        // x1..x5
  DPartial3, // del_1..del_3 (the dual polynomial algebra carrying F(0,q))
  DHat3,     // dhat_1..dhat_3 = S
};

int varset_arity(VarSet vs);

struct Expo {
  std::array<int, 5> e{0, 0, 0, 0, 0};
  auto operator<=>(const Expo&) const = default;
  int total() const { return e[0] + e[1] + e[2] + e[3] + e[4]; }
};

/// Sparse multivariate polynomial over Q on a declared variable set.
class CommPoly {
 public:
  explicit CommPoly(VarSet vs = VarSet::X5) : vars_(vs) {}

  static CommPoly variable(VarSet vs, int i, int power = 1);
  static CommPoly constant(VarSet vs, const Scalar& c);

  VarSet varset() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Scalar>& terms() const { return terms_; }

  void add_term(const Expo& m, const Scalar& c);

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  CommPoly operator*(const Scalar& c) const;
  bool operator==(const CommPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  /// partial derivative with respect to variable i (1-based)
  CommPoly d(int i) const;

  /// substitution swapping variables i and j (1-based); used for the x4<->x5
  /// automorphism
  CommPoly swap_vars(int i, int j) const;

  int total_degree() const;
  std::string to_string() const;

 private:
  VarSet vars_;
  std::map<Expo, Scalar> terms_;
};

}  // namespace e36

#endif
