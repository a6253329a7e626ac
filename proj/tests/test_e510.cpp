#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e36/e510.hpp"

using namespace e36;

namespace {

Realized gen(Gen g) { return realize(g); }

bool bracket_is(Gen a, Gen b, const GenComb& expected) {
  Realized lhs = bracket(gen(a), gen(b));
  Realized rhs = std::holds_alternative<VField>(lhs) ? Realized(VField{})
                                                     : Realized(TwoForm{});
  // build expected realization
  bool first = true;
  for (const auto& [c, g] : expected) {
    Realized t = realized_scale(gen(g), c);
    rhs = first ? t : realized_add(rhs, t);
    first = false;
  }
  if (expected.empty()) return realized_zero(lhs);
  return realized_eq(lhs, rhs);
}

}  // namespace

TEST_CASE("realizations of the named generators") {
  // f0 = dx1 ^ dx4
  CHECK(realized_eq(gen(Gen::f0), gen(Gen::dp1)));
  // Y = 2/3(x1 del1 + x2 del2 + x3 del3) - (x4 del4 + x5 del5)
  const Realized ry = gen(Gen::Y);
  const auto& y = std::get<VField>(ry);
  CHECK(y.c[0] == CommPoly::variable(VarSet::X5, 1) * scalar_of(2, 3));
  CHECK(y.c[4] == CommPoly::variable(VarSet::X5, 5) * Scalar(-1));
  // dhat1 is the constant field del1
  const Realized rd1 = gen(Gen::dh1);
  const auto& d1 = std::get<VField>(rd1);
  CHECK(d1.c[0] == CommPoly::constant(VarSet::X5, 1));
  // all generators satisfy their type invariants
  std::string why;
  CHECK(check_brackets_preserve_invariants(&why));
  INFO(why);
}

TEST_CASE("bracket golden values from the relation tables") {
  CHECK(bracket_is(Gen::e0m, Gen::f0, {{Scalar(1), Gen::f2}}));       // (1.1)
  CHECK(realized_eq(bracket(gen(Gen::e0), gen(Gen::f0)), gen(Gen::h0)));  // (1.2)
  // [d1+, d2-] = -del3 ; [d1+, d2+] = 0
  CHECK(bracket_is(Gen::dp1, Gen::dm2, {{Scalar(-1), Gen::dh3}}));
  CHECK(bracket_is(Gen::dp1, Gen::dp2, {}));
  // e0- / d tables
  CHECK(bracket_is(Gen::e0m, Gen::dm1, {}));
  CHECK(bracket_is(Gen::e0m, Gen::dp1, {{Scalar(1), Gen::f2}}));
  CHECK(bracket_is(Gen::e0m, Gen::dp2, {{Scalar(-1), Gen::f12}}));
  CHECK(bracket_is(Gen::e0m, Gen::dp3, {}));
  // e0+ / d tables
  CHECK(bracket_is(Gen::e0p, Gen::dm1, {{Scalar(-1), Gen::f2}}));
  CHECK(bracket_is(Gen::e0p, Gen::dm2, {{Scalar(1), Gen::f12}}));
  CHECK(bracket_is(Gen::e0p, Gen::dm3, {}));
  CHECK(bracket_is(Gen::e0p, Gen::dp1, {}));
  // e0 / d tables
  CHECK(bracket_is(Gen::e0, Gen::dm1, {{Scalar(-2), Gen::f3}}));
  CHECK(bracket_is(Gen::e0, Gen::dm2, {}));
  CHECK(bracket_is(Gen::e0, Gen::dm3, {}));
  CHECK(realized_eq(bracket(gen(Gen::e0), gen(Gen::dp1)), gen(Gen::h0)));
  CHECK(bracket_is(Gen::e0, Gen::dp2, {{Scalar(1), Gen::f1}}));
  // the printed table says -f12 here, but its own consequence identities and
  // the epsilon rule give +f12; the realization is the arbiter
  CHECK(bracket_is(Gen::e0, Gen::dp3, {{Scalar(1), Gen::f12}}));
  // e0 / dhat
  CHECK(bracket_is(Gen::e0, Gen::dh1, {}));
  CHECK(bracket_is(Gen::e0, Gen::dh2, {{Scalar(1), Gen::dm3}}));
  CHECK(bracket_is(Gen::e0, Gen::dh3, {{Scalar(-1), Gen::dm2}}));
  // e0+- commute with dhat1, dhat2; the dhat3 commutator is the -d3+- that
  // produces the degree-lowering correction terms of the operator calculus
  for (int i = 1; i <= 2; ++i) {
    CHECK(bracket_is(Gen::e0p, dhat(i), {}));
    CHECK(bracket_is(Gen::e0m, dhat(i), {}));
  }
  CHECK(bracket_is(Gen::e0p, Gen::dh3, {{Scalar(-1), Gen::dp3}}));
  CHECK(bracket_is(Gen::e0m, Gen::dh3, {{Scalar(-1), Gen::dm3}}));
}

TEST_CASE("structure table entries match the stated combinations") {
  const auto& alg = Algebra::instance();
  auto entry_is = [&](Gen a, Gen b, const GenComb& want) {
    const auto& got = alg.table(a, b);
    if (got.size() != want.size()) return false;
    for (size_t i = 0; i < got.size(); ++i)
      if (got[i].c != want[i].c || got[i].g != want[i].g) return false;
    return true;
  };
  CHECK(entry_is(Gen::e0m, Gen::dp1, {{Scalar(1), Gen::f2}}));
  CHECK(entry_is(Gen::e0, Gen::dm1, {{Scalar(-2), Gen::f3}}));
  CHECK(entry_is(Gen::e0, Gen::dh3, {{Scalar(-1), Gen::dm2}}));
  // h0 expressed through the independent basis
  const auto& h0 = alg.table(Gen::e0, Gen::f0);
  GenComb expect = {{scalar_of(2, 3), Gen::h1},
                    {scalar_of(1, 3), Gen::h2},
                    {Scalar(-1), Gen::h3},
                    {Scalar(-1), Gen::Y}};
  CHECK(h0.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(h0[i].c == expect[i].c);
    CHECK(h0[i].g == expect[i].g);
  }
  // e12 = [e1, e2]
  CHECK(entry_is(Gen::e1, Gen::e2, {{Scalar(1), Gen::e12}}));
  // sl(3) camp acts on nothing in sl(2): [f1, f3] = 0
  CHECK(entry_is(Gen::f1, Gen::f3, {}));
}

TEST_CASE("phi is an involutive automorphism with the stated generator images") {
  std::string why;
  CHECK(check_phi_is_automorphism(&why));
  INFO(why);
  CHECK(realized_eq(phi_realized(gen(Gen::dp1)), gen(Gen::dm1)));
  CHECK(realized_eq(phi_realized(gen(Gen::dm2)), gen(Gen::dp2)));
  CHECK(realized_eq(phi_realized(gen(Gen::h3)), realized_scale(gen(Gen::h3), Scalar(-1))));
  CHECK(realized_eq(phi_realized(gen(Gen::h1)), gen(Gen::h1)));
  CHECK(realized_eq(phi_realized(gen(Gen::e3sl2)), gen(Gen::f3)));
  for (int i = 1; i <= 3; ++i)
    CHECK(realized_eq(phi_realized(gen(dhat(i))),
                      realized_scale(gen(dhat(i)), Scalar(-1))));
  // abstract phi table agrees
  const auto& alg = Algebra::instance();
  CHECK(alg.phi_gen(Gen::dp1).size() == 1);
  CHECK(alg.phi_gen(Gen::dp1)[0].g == Gen::dm1);
  CHECK(alg.phi_gen(Gen::dh2)[0].c == -1);
}

TEST_CASE("g1 subalgebra structure") {
  std::string why;
  CHECK(check_subalgebra_g1(+1, &why));
  INFO(why);
  CHECK(check_subalgebra_g1(-1, &why));
  // same-sign pairing vanishes: [d1-, x1 d2- + x2 d1-] = 0
  CHECK(realized_zero(bracket(gen(Gen::dm1), realize_g1({-1, 1, 2}))));
  // the cross pairing is the nonzero one and lands in sl(3)
  Realized cross = bracket(gen(Gen::dm1), realize_g1({+1, 1, 2}));
  CHECK(!realized_zero(cross));
}

TEST_CASE("super-Jacobi on all generator triples") {
  std::string why;
  CHECK(check_super_jacobi_all_triples(&why));
  INFO(why);
}

TEST_CASE("ambiguous raising-operator conventions span the same nilpotent") {
  // e2 = x2 del3 and e12 = x1 del3 = [e1, e2]; the alternative reading
  // (e12 = x2 del3) gives the same span {e1, e2, e12}
  CHECK(realized_eq(bracket(gen(Gen::e1), gen(Gen::e2)), gen(Gen::e12)));
  CHECK(realized_eq(gen(Gen::e3sl3), gen(Gen::e12)));
}

TEST_CASE("epsilon sign flip is detected (mutation hook)") {
  set_epsilon_flip_for_test(true);
  bool flipped_detected = !bracket_is(Gen::e0m, Gen::f0, {{Scalar(1), Gen::f2}});
  set_epsilon_flip_for_test(false);
  CHECK(flipped_detected);
  CHECK(bracket_is(Gen::e0m, Gen::f0, {{Scalar(1), Gen::f2}}));
}
