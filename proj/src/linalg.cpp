#include "e36/linalg.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace e36 {

namespace {

using Row = std::map<int, Scalar>;

std::vector<Row> to_rows(const SparseMatrix<Scalar>& m) {
  std::vector<Row> rows(m.rows);
  for (const auto& [rc, v] : m.entries) rows[rc.first][rc.second] = v;
  return rows;
}

// in-place RREF; returns pivot columns in order
std::vector<int> rref(std::vector<Row>& rows, int cols) {
  std::vector<int> pivot_cols;
  size_t next_row = 0;
  for (int c = 0; c < cols && next_row < rows.size(); ++c) {
    size_t prow = next_row;
    while (prow < rows.size()) {
      auto it = rows[prow].find(c);
      if (it != rows[prow].end() && it->second != 0) break;
      ++prow;
    }
    if (prow == rows.size()) continue;
    std::swap(rows[next_row], rows[prow]);
    Scalar inv = Scalar(1) / rows[next_row][c];
    for (auto& [cc, v] : rows[next_row]) v *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row) continue;
      auto it = rows[r].find(c);
      if (it == rows[r].end() || it->second == 0) continue;
      Scalar f = it->second;
      for (const auto& [cc, v] : rows[next_row]) {
        auto jt = rows[r].find(cc);
        if (jt == rows[r].end()) {
          Scalar nv = -f * v;
          if (nv != 0) rows[r][cc] = nv;
        } else {
          jt->second -= f * v;
          if (jt->second == 0) rows[r].erase(jt);
        }
      }
    }
    pivot_cols.push_back(c);
    ++next_row;
  }
  return pivot_cols;
}

void normalize_first_nonzero(std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (x != 0) {
      Scalar inv = Scalar(1) / x;
      for (auto& y : v) y *= inv;
      return;
    }
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(const SparseMatrix<Scalar>& m) {
  auto rows = to_rows(m);
  auto pivots = rref(rows, m.cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Scalar> v(m.cols, Scalar(0));
    v[fc] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      auto it = rows[r].find(fc);
      if (it != rows[r].end()) v[pivots[r]] = -it->second;
    }
    normalize_first_nonzero(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const SparseMatrix<Scalar>& m) {
  auto rows = to_rows(m);
  return static_cast<int>(rref(rows, m.cols).size());
}

std::optional<std::vector<Scalar>> solve(const SparseMatrix<Scalar>& a,
                                         const std::vector<Scalar>& b) {
  // augmented RREF
  SparseMatrix<Scalar> aug(a.rows, a.cols + 1);
  aug.entries = a.entries;
  for (int r = 0; r < a.rows; ++r)
    if (b[r] != 0) aug.entries[{r, a.cols}] = b[r];
  auto rows = to_rows(aug);
  auto pivots = rref(rows, aug.cols);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  std::vector<Scalar> x(a.cols, Scalar(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    auto it = rows[r].find(a.cols);
    x[pivots[r]] = (it == rows[r].end()) ? Scalar(0) : it->second;
  }
  return x;
}

SparseMatrix<Scalar> specialize(const SparseMatrix<ThetaPoly>& m, const Scalar& theta0) {
  SparseMatrix<Scalar> out(m.rows, m.cols);
  for (const auto& [rc, p] : m.entries) {
    Scalar v = p.eval(theta0);
    if (v != 0) out.entries[rc] = v;
  }
  return out;
}

namespace {

using PRow = std::map<int, ThetaPoly>;

// small rational-function layer for back substitution
struct RatFun {
  ThetaPoly num, den;
  RatFun() : num(0), den(1) {}
  explicit RatFun(ThetaPoly n, ThetaPoly d = ThetaPoly(Scalar(1)))
      : num(std::move(n)), den(std::move(d)) {
    reduce();
  }
  void reduce() {
    if (num.is_zero()) {
      den = ThetaPoly(Scalar(1));
      return;
    }
    ThetaPoly g = gcd_poly(num, den);
    if (g.degree() > 0) {
      num = num.divexact(g);
      den = den.divexact(g);
    }
    ThetaPoly d = den;
    Scalar c = d.make_primitive();
    den = d;
    std::vector<Scalar> sc;
    for (int k = 0; k <= num.degree(); ++k) sc.push_back(num.coeff(k) / c);
    num = ThetaPoly(sc);
  }
  bool is_zero() const { return num.is_zero(); }
};

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num * b.num, a.den * b.den);
}
RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
}
RatFun ratdiv(const RatFun& a, const RatFun& b) {
  return RatFun(a.num * b.den, a.den * b.num);
}

}  // namespace

ParamKernel param_nullspace(const SparseMatrix<ThetaPoly>& m) {
  ParamKernel out;
  std::vector<PRow> rows(m.rows);
  for (const auto& [rc, v] : m.entries) rows[rc.first][rc.second] = v;

  std::vector<int> pivot_cols;
  std::vector<ThetaPoly> pivot_vals;
  ThetaPoly prev_pivot(Scalar(1));
  size_t next_row = 0;
  for (int c = 0; c < m.cols && next_row < rows.size(); ++c) {
    size_t prow = next_row;
    while (prow < rows.size()) {
      auto it = rows[prow].find(c);
      if (it != rows[prow].end() && !it->second.is_zero()) break;
      ++prow;
    }
    if (prow == rows.size()) continue;
    std::swap(rows[next_row], rows[prow]);
    const ThetaPoly piv = rows[next_row][c];
    for (size_t r = next_row + 1; r < rows.size(); ++r) {
      auto it = rows[r].find(c);
      ThetaPoly f = (it == rows[r].end()) ? ThetaPoly() : it->second;
      if (f.is_zero()) {
        // still rescale the row to keep Bareiss divisions exact
        for (auto& [cc, v] : rows[r]) v = (v * piv).divexact(prev_pivot);
        continue;
      }
      PRow updated;
      std::set<int> touched;
      for (const auto& [cc, v] : rows[r]) touched.insert(cc);
      for (const auto& [cc, v] : rows[next_row]) touched.insert(cc);
      for (int cc : touched) {
        auto a = rows[r].find(cc);
        auto b = rows[next_row].find(cc);
        ThetaPoly av = (a == rows[r].end()) ? ThetaPoly() : a->second;
        ThetaPoly bv = (b == rows[next_row].end()) ? ThetaPoly() : b->second;
        ThetaPoly nv = (av * piv - f * bv).divexact(prev_pivot);
        if (!nv.is_zero()) updated[cc] = nv;
      }
      rows[r] = std::move(updated);
    }
    prev_pivot = piv;
    pivot_cols.push_back(c);
    pivot_vals.push_back(piv);
    ++next_row;
  }

  const int k = static_cast<int>(pivot_cols.size());
  out.generic_dim = m.cols - k;

  // generic kernel via back substitution over Q(theta)
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<RatFun> x(m.cols);
    x[fc] = RatFun(ThetaPoly(Scalar(1)));
    for (int r = k - 1; r >= 0; --r) {
      RatFun acc;
      for (const auto& [cc, v] : rows[r]) {
        if (cc == pivot_cols[r]) continue;
        if (!x[cc].is_zero()) acc = acc - RatFun(v) * x[cc];
      }
      x[pivot_cols[r]] = ratdiv(acc, RatFun(pivot_vals[r]));
    }
    // clear to polynomial entries with a single declared denominator
    ThetaPoly den(Scalar(1));
    for (const auto& xi : x)
      if (!xi.is_zero()) den = den * xi.den.divexact(gcd_poly(den, xi.den));
    ParamKernel::GenericVector gv;
    gv.denominator = den;
    for (const auto& xi : x)
      gv.entries.push_back(xi.is_zero() ? ThetaPoly()
                                        : xi.num * den.divexact(xi.den));
    out.generic_basis.push_back(std::move(gv));
  }

  // candidate special points: rational roots of the pivots
  std::set<Scalar> candidates;
  for (const auto& p : pivot_vals) {
    if (p.degree() < 1) continue;
    for (const auto& r : rational_roots(p, &out.residual_factors)) candidates.insert(r);
  }
  for (const auto& t0 : candidates) {
    auto sp = specialize(m, t0);
    auto ker = nullspace(sp);
    if (static_cast<int>(ker.size()) > out.generic_dim)
      out.special_points.push_back({t0, std::move(ker)});
  }
  return out;
}

int span_rank(const std::vector<std::vector<Scalar>>& vecs) {
  if (vecs.empty()) return 0;
  SparseMatrix<Scalar> m(static_cast<int>(vecs.size()),
                         static_cast<int>(vecs[0].size()));
  for (size_t r = 0; r < vecs.size(); ++r)
    for (size_t c = 0; c < vecs[r].size(); ++c)
      if (vecs[r][c] != 0) m.entries[{(int)r, (int)c}] = vecs[r][c];
  return rank(m);
}

bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v) {
  auto all = basis;
  all.push_back(v);
  return span_rank(all) == span_rank(basis);
}

bool same_span(const std::vector<std::vector<Scalar>>& a,
               const std::vector<std::vector<Scalar>>& b) {
  auto uni = a;
  uni.insert(uni.end(), b.begin(), b.end());
  int ru = span_rank(uni);
  return ru == span_rank(a) && ru == span_rank(b);
}

}  // namespace e36
