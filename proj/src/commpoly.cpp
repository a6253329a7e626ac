#include "e36/commpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace e36 {

int varset_arity(VarSet vs) { return vs == VarSet::X5 ? 5 : 3; }

CommPoly CommPoly::variable(VarSet vs, int i, int power) {
  if (i < 1 || i > varset_arity(vs))
    throw std::invalid_argument("CommPoly::variable: index out of range");
  CommPoly p(vs);
  Expo m;
  m.e[i - 1] = power;
  p.terms_[m] = 1;
  return p;
}

CommPoly CommPoly::constant(VarSet vs, const Scalar& c) {
  CommPoly p(vs);
  if (c != 0) p.terms_[Expo{}] = c;
  return p;
}

void CommPoly::add_term(const Expo& m, const Scalar& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommPoly CommPoly::operator-() const {
  CommPoly r(vars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("CommPoly: mixed variable sets");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("CommPoly: mixed variable sets");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("CommPoly: mixed variable sets");
  CommPoly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Expo m;
      for (int i = 0; i < 5; ++i) m.e[i] = ma.e[i] + mb.e[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

CommPoly CommPoly::operator*(const Scalar& c) const {
  CommPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

CommPoly CommPoly::d(int i) const {
  CommPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[i - 1] == 0) continue;
    Expo n = m;
    n.e[i - 1] -= 1;
    r.add_term(n, c * m.e[i - 1]);
  }
  return r;
}

CommPoly CommPoly::swap_vars(int i, int j) const {
  CommPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    Expo n = m;
    std::swap(n.e[i - 1], n.e[j - 1]);
    r.add_term(n, c);
  }
  return r;
}

int CommPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

std::string CommPoly::to_string() const {
  if (terms_.empty()) return "0";
  const char* names[3][5] = {{"x1", "x2", "x3", "x4", "x5"},
                             {"del1", "del2", "del3", "", ""},
                             {"dh1", "dh2", "dh3", "", ""}};
  int which = vars_ == VarSet::X5 ? 0 : (vars_ == VarSet::DPartial3 ? 1 : 2);
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < varset_arity(vars_); ++i) {
      if (m.e[i] == 0) continue;
      os << "*" << names[which][i];
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

}  // namespace e36
