#ifndef E36_LINALG_HPP
#define E36_LINALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "e36/theta.hpp"

namespace e36 {

/// Sparse matrix over an exact coefficient ring. No explicit zeros stored.
template <typename T>
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, T> entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c) {}

  void set(int r, int c, const T& v) {
    if (v == T(0))
      entries.erase({r, c});
    else
      entries[{r, c}] = v;
  }
  void add(int r, int c, const T& v) {
    auto it = entries.find({r, c});
    if (it == entries.end()) {
      if (!(v == T(0))) entries[{r, c}] = v;
    } else {
      it->second += v;
      if (it->second == T(0)) entries.erase(it);
    }
  }
  T get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? T(0) : it->second;
  }
};

/// Basis of {v : Mv = 0}. Deterministic: RREF with columns scanned left to
/// right and the first available row as pivot; one basis vector per free
/// column in ascending order, scaled so its first nonzero entry is 1.
std::vector<std::vector<Scalar>> nullspace(const SparseMatrix<Scalar>& m);

int rank(const SparseMatrix<Scalar>& m);

/// Least-squares-free exact solve of A x = b; returns a particular solution
/// if one exists (with free variables set to zero).
std::optional<std::vector<Scalar>> solve(const SparseMatrix<Scalar>& a,
                                         const std::vector<Scalar>& b);

struct ParamKernel {
  int generic_dim = 0;
  /// Basis over rational functions of theta: polynomial entries with one
  /// declared denominator per vector (entries[i]/denominator).
  struct GenericVector {
    std::vector<ThetaPoly> entries;
    ThetaPoly denominator;
  };
  std::vector<GenericVector> generic_basis;
  /// Rational theta values where the kernel is strictly larger than the
  /// generic one, with the full kernel basis at that specialization.
  struct SpecialPoint {
    Scalar theta0;
    std::vector<std::vector<Scalar>> kernel;
  };
  std::vector<SpecialPoint> special_points;
  /// Pivot factors of degree >= 2 with no rational root (none arise in the
  /// computations here, but they are reported instead of being dropped).
  std::vector<ThetaPoly> residual_factors;
};

/// Fraction-free (Bareiss) elimination over Q[theta]; special points found by
/// rational-root extraction of pivot polynomials and confirmed by exact
/// specialization of the original matrix.
ParamKernel param_nullspace(const SparseMatrix<ThetaPoly>& m);

SparseMatrix<Scalar> specialize(const SparseMatrix<ThetaPoly>& m, const Scalar& theta0);

/// rank of the span of the given vectors
int span_rank(const std::vector<std::vector<Scalar>>& vecs);

/// true iff v lies in the span of basis
bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v);

/// true iff the two families span the same subspace
bool same_span(const std::vector<std::vector<Scalar>>& a,
               const std::vector<std::vector<Scalar>>& b);

}  // namespace e36

#endif
