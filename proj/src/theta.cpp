#include "e36/theta.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace e36 {

void ThetaPoly::trim() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Scalar ThetaPoly::leading() const {
  if (coef_.empty()) return 0;
  return coef_.back();
}

Scalar ThetaPoly::eval(const Scalar& t) const {
  Scalar acc = 0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

ThetaPoly ThetaPoly::operator-() const {
  ThetaPoly r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

ThetaPoly& ThetaPoly::operator+=(const ThetaPoly& o) {
  if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Scalar(0));
  for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
  trim();
  return *this;
}

ThetaPoly& ThetaPoly::operator-=(const ThetaPoly& o) {
  if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Scalar(0));
  for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
  trim();
  return *this;
}

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
  if (a.is_zero() || b.is_zero()) return ThetaPoly();
  std::vector<Scalar> out(a.coef_.size() + b.coef_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.coef_.size(); ++i)
    for (size_t j = 0; j < b.coef_.size(); ++j) out[i + j] += a.coef_[i] * b.coef_[j];
  return ThetaPoly(std::move(out));
}

ThetaPoly ThetaPoly::divexact(const ThetaPoly& d) const {
  if (d.is_zero()) throw std::domain_error("ThetaPoly: division by zero");
  if (is_zero()) return ThetaPoly();
  if (degree() < d.degree())
    throw std::domain_error("ThetaPoly: inexact division (degree)");
  std::vector<Scalar> rem = coef_;
  std::vector<Scalar> quo(coef_.size() - d.coef_.size() + 1, Scalar(0));
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    Scalar q = rem[k + d.degree()] / d.leading();
    quo[k] = q;
    if (q != 0)
      for (size_t j = 0; j < d.coef_.size(); ++j) rem[k + j] -= q * d.coef_[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("ThetaPoly: inexact division (remainder)");
  return ThetaPoly(std::move(quo));
}

Scalar ThetaPoly::make_primitive() {
  if (is_zero()) return 0;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& c : coef_) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    num_gcd = g;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    den_lcm = l;
  }
  Scalar content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading() < 0) content = -content;
  for (auto& c : coef_) c /= content;
  return content;
}

std::string ThetaPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    Scalar c = coef_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Scalar a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

ThetaPoly gcd_poly(ThetaPoly a, ThetaPoly b) {
  if (a.is_zero()) {
    b.make_primitive();
    return b;
  }
  if (b.is_zero()) {
    a.make_primitive();
    return a;
  }
  while (!b.is_zero()) {
    // remainder of a by b
    std::vector<Scalar> rem(a.coeffs());
    while (static_cast<int>(rem.size()) - 1 >= b.degree()) {
      int k = static_cast<int>(rem.size()) - 1 - b.degree();
      Scalar q = rem.back() / b.leading();
      for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeff(j);
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (rem.empty()) break;
    }
    a = b;
    b = ThetaPoly(std::move(rem));
  }
  a.make_primitive();
  return a;
}

namespace {

// full factorization by trial division; composite leftovers are rejected so
// divisor enumeration can never silently miss a root
std::vector<mpz_class> all_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> fac;
  auto push = [&fac](const mpz_class& p) {
    if (!fac.empty() && fac.back().first == p)
      fac.back().second++;
    else
      fac.emplace_back(p, 1);
  };
  mpz_class d = 2;
  while (d * d <= n) {
    while (n % d == 0) {
      push(d);
      n /= d;
    }
    d += (d == 2) ? 1 : 2;
    if (d > 2000000) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
      throw std::runtime_error(
          "rational_roots: coefficient too hard to factor: " + n.get_str());
    push(n);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fac) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Scalar> rational_roots(const ThetaPoly& p, std::vector<ThetaPoly>* residual) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  std::set<Scalar> roots;
  ThetaPoly q = p;
  q.make_primitive();
  // strip powers of theta
  while (q.degree() >= 1 && q.coeff(0) == 0) {
    roots.insert(Scalar(0));
    q = q.divexact(ThetaPoly::theta());
  }
  ThetaPoly z = q;
  while (z.degree() >= 1) {
    // clear denominators to an integer polynomial
    mpz_class den_lcm = 1;
    for (int k = 0; k <= z.degree(); ++k) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), z.coeff(k).get_den().get_mpz_t());
      den_lcm = l;
    }
    std::vector<Scalar> scaled;
    for (int k = 0; k <= z.degree(); ++k) scaled.push_back(z.coeff(k) * Scalar(den_lcm));
    z = ThetaPoly(scaled);
    if (z.degree() == 1) {
      roots.insert(-z.coeff(0) / z.coeff(1));
      return std::vector<Scalar>(roots.begin(), roots.end());
    }
    if (z.degree() == 2) {
      Scalar a = z.coeff(2), b = z.coeff(1), c = z.coeff(0);
      Scalar disc = b * b - 4 * a * c;
      if (disc < 0) break;
      // exact square test on num/den separately
      mpz_class sn, sd;
      mpz_sqrt(sn.get_mpz_t(), disc.get_num().get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), disc.get_den().get_mpz_t());
      if (sn * sn != disc.get_num() || sd * sd != disc.get_den()) break;
      Scalar root_disc(sn, sd);
      root_disc.canonicalize();
      roots.insert((-b + root_disc) / (2 * a));
      roots.insert((-b - root_disc) / (2 * a));
      return std::vector<Scalar>(roots.begin(), roots.end());
    }
    // degree >= 3: enumerate candidates u/v, u | z(0), v | lead(z)
    bool found = false;
    auto nums = all_divisors(z.coeff(0).get_num());
    auto dens = all_divisors(z.leading().get_num());
    for (const auto& u : nums) {
      for (const auto& v : dens) {
        for (int s : {1, -1}) {
          Scalar cand(s * u, v);
          cand.canonicalize();
          if (z.eval(cand) == 0) {
            roots.insert(cand);
            std::vector<Scalar> lin{-cand, 1};
            z = z.divexact(ThetaPoly(lin));
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  if (z.degree() >= 2 && residual) {
    ThetaPoly r = z;
    r.make_primitive();
    if (std::find(residual->begin(), residual->end(), r) == residual->end())
      residual->push_back(r);
  }
  return std::vector<Scalar>(roots.begin(), roots.end());
}

}  // namespace e36
