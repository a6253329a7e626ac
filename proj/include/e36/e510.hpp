#ifndef E36_E510_HPP
#define E36_E510_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "e36/commpoly.hpp"
#include "e36/linalg.hpp"

namespace e36 {

/// Generators of E(3,6) inside E(5,10), plus the derived element h0.
/// The source material overloads the symbol e3 for both x1*del3 (inside
/// sl(3)) and x4*del5 (inside sl(2)); the enumeration keeps them apart.
enum class Gen : int {
  h1 = 0, h2, h3, Y,
  e1, e2, e12, e3sl3,
  f1, f2, f12,
  e3sl2, f3,
  e0, f0, e0p, e0m,
  dm1, dm2, dm3,
  dp1, dp2, dp3,
  dh1, dh2, dh3,
  h0,
};

constexpr int kGenCount = 27;

const char* gen_name(Gen g);
std::optional<Gen> gen_from_name(const std::string& name);

/// Z-grading degree of each generator inside E(3,6).
int gen_degree(Gen g);
/// true for the 2-form (odd) generators.
bool gen_odd(Gen g);
inline bool gen_lminus(Gen g) { return gen_degree(g) < 0; }

inline Gen dminus(int i) { return static_cast<Gen>(static_cast<int>(Gen::dm1) + i - 1); }
inline Gen dplus(int i) { return static_cast<Gen>(static_cast<int>(Gen::dp1) + i - 1); }
inline Gen dside(int side, int i) { return side > 0 ? dplus(i) : dminus(i); }
inline Gen dhat(int i) { return static_cast<Gen>(static_cast<int>(Gen::dh1) + i - 1); }

/// Polynomial-coefficient vector field sum_i c[i] * d/dx_{i+1}; elements of
/// the even part keep divergence zero.
struct VField {
  std::array<CommPoly, 5> c{CommPoly(VarSet::X5), CommPoly(VarSet::X5),
                            CommPoly(VarSet::X5), CommPoly(VarSet::X5),
                            CommPoly(VarSet::X5)};
  bool operator==(const VField&) const = default;
};

/// 2-form sum_{j<k} c[pair] dx_j ^ dx_k; elements of the odd part are closed.
struct TwoForm {
  std::array<CommPoly, 10> c{CommPoly(VarSet::X5), CommPoly(VarSet::X5),
                             CommPoly(VarSet::X5), CommPoly(VarSet::X5),
                             CommPoly(VarSet::X5), CommPoly(VarSet::X5),
                             CommPoly(VarSet::X5), CommPoly(VarSet::X5),
                             CommPoly(VarSet::X5), CommPoly(VarSet::X5)};
  bool operator==(const TwoForm&) const = default;
};

int pair_index(int j, int k);  // 1 <= j < k <= 5

using Realized = std::variant<VField, TwoForm>;

bool realized_zero(const Realized& r);
Realized realized_add(const Realized& a, const Realized& b);
Realized realized_scale(const Realized& a, const Scalar& c);
bool realized_eq(const Realized& a, const Realized& b);
std::string realized_to_string(const Realized& r);

CommPoly divergence(const VField& a);
/// coefficients of dB as a 3-form, indexed by triples i<j<k
std::array<CommPoly, 10> exterior_derivative(const TwoForm& b);
bool is_closed(const TwoForm& b);

Realized realize(Gen g);

/// Super-bracket computed from first principles: vector-field commutator,
/// Lie derivative, and the epsilon rule on form pairs.
Realized bracket(const Realized& a, const Realized& b);

/// x4 <-> x5 substitution automorphism.
Realized phi_realized(const Realized& r);

/// Test hook: flips the sign of every epsilon in the odd-odd bracket so a
/// broken convention is observable end to end.
void set_epsilon_flip_for_test(bool flip);

struct GenTerm {
  Scalar c;
  Gen g;
};
using GenComb = std::vector<GenTerm>;  // sorted by enum order, no zero terms

std::string gencomb_to_string(const GenComb& v);

/// Basis element x_i d_j^side + x_j d_i^side of g1+- (i <= j).
struct G1Elem {
  int side;  // +1 or -1
  int i, j;
  auto operator<=>(const G1Elem&) const = default;
};

Realized realize_g1(const G1Elem& e);

/// One-time-built tables of brackets expressed back in the generator basis.
class Algebra {
 public:
  static const Algebra& instance();

  const Realized& realization(Gen g) const { return real_[static_cast<int>(g)]; }

  /// Expresses r as an exact combination of the independent generators
  /// (aliases f0, e3sl3, h0 excluded); throws when r is outside the span.
  GenComb express_in_span(const Realized& r) const;

  /// bracket table entry; tabulated for every ordered pair of generator
  /// degrees summing to <= 0
  const GenComb& table(Gen a, Gen b) const;
  bool has_table(Gen a, Gen b) const;

  /// g1 basis element bracket with an L_- generator
  const GenComb& g1_table(const G1Elem& e, Gen b) const;

  /// abstract phi on generators (defined for all but e0, whose image leaves
  /// the tabulated span)
  const GenComb& phi_gen(Gen g) const;

  /// {d_i^sigma, d_j^tau} anticommutator coefficient on dhat_k, queried by
  /// the PBW normalizer
  const GenComb& odd_pair(Gen di, Gen dj) const;

  std::string export_json() const;

 private:
  Algebra();
  std::array<Realized, kGenCount> real_;
  std::map<std::pair<Gen, Gen>, GenComb> table_;
  std::map<std::pair<G1Elem, Gen>, GenComb> g1_table_;
  std::map<Gen, GenComb> phi_;
  // solver state for express_in_span
  std::vector<Gen> span_basis_;
  std::map<std::string, int> coord_index_;
  SparseMatrix<Scalar> coord_matrix_;
};

/// Structural checks (used by check-relations and the test suites).
bool check_super_jacobi_all_triples(std::string* first_failure = nullptr);
bool check_subalgebra_g1(int side, std::string* first_failure = nullptr);
bool check_phi_is_automorphism(std::string* first_failure = nullptr);
bool check_brackets_preserve_invariants(std::string* first_failure = nullptr);

}  // namespace e36

#endif
