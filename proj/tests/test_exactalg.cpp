#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "e36/linalg.hpp"
#include "e36/rational.hpp"
#include "e36/theta.hpp"

using namespace e36;

TEST_CASE("scalar arithmetic basics") {
  CHECK(scalar_of(1, 2) + scalar_of(1, 3) == scalar_of(5, 6));
  CHECK(scalar_from_string("2/4") == scalar_of(1, 2));
  CHECK(scalar_to_string(scalar_of(-4, 6)) == "-2/3");
  CHECK_THROWS_AS(checked_div(scalar_of(1), scalar_of(0)), std::domain_error);
  CHECK(falling_factorial(Scalar(5), 3) == 60);
  CHECK(falling_factorial(Scalar(7), 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(multinomial3(4, 1, 2) == 12);
}

TEST_CASE("scalar ring laws on sampled triples") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
  for (int it = 0; it < 300; ++it) {
    Scalar a = scalar_of(num(rng), den(rng));
    Scalar b = scalar_of(num(rng), den(rng));
    Scalar c = scalar_of(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("theta polynomial arithmetic") {
  ThetaPoly t = ThetaPoly::theta();
  ThetaPoly p = t * t - ThetaPoly(Scalar(4));
  CHECK(p.degree() == 2);
  CHECK(p.eval(Scalar(2)) == 0);
  CHECK(p.eval(Scalar(3)) == 5);
  ThetaPoly q = p.divexact(t - ThetaPoly(Scalar(2)));
  CHECK(q == t + ThetaPoly(Scalar(2)));
  CHECK_THROWS(p.divexact(t - ThetaPoly(Scalar(1))));
  CHECK((t - 1) * (t - 1) != (t - 1) * (t + 1));
  CHECK(gcd_poly((t - 1) * (t - 2), (t - 2) * (t + 5)) == t - ThetaPoly(Scalar(2)));
}

TEST_CASE("theta rational roots") {
  ThetaPoly t = ThetaPoly::theta();
  auto r1 = rational_roots(t - ThetaPoly(Scalar(2)));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == 2);

  // (2 - theta + 2r) with r = 1: root 4
  auto r2 = rational_roots(ThetaPoly(Scalar(4)) - t);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == 4);

  // (theta^2 - 1/4) * theta
  ThetaPoly p = (t * t - ThetaPoly(scalar_of(1, 4))) * t;
  auto r3 = rational_roots(p);
  REQUIRE(r3.size() == 3);
  CHECK(r3[0] == scalar_of(-1, 2));
  CHECK(r3[1] == 0);
  CHECK(r3[2] == scalar_of(1, 2));

  // irreducible quadratic reported as residual factor, not roots
  std::vector<ThetaPoly> residual;
  auto r4 = rational_roots(t * t - ThetaPoly(Scalar(2)), &residual);
  CHECK(r4.empty());
  REQUIRE(residual.size() == 1);
  CHECK(residual[0] == t * t - ThetaPoly(Scalar(2)));

  // cubic with rational roots (divisor enumeration path)
  ThetaPoly cubic = (t - 1) * (t - 2) * (ThetaPoly(Scalar(3)) * t + 1);
  auto r5 = rational_roots(cubic);
  REQUIRE(r5.size() == 3);
  CHECK(r5[0] == scalar_of(-1, 3));
}

TEST_CASE("nullspace on the basic shapes") {
  // [[1,2],[2,4]] has kernel spanned by (-2,1)
  SparseMatrix<Scalar> m(2, 2);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  // normalized so the first nonzero entry is 1; same line as (-2,1)
  CHECK(ker[0][0] == 1);
  CHECK(ker[0][1] == scalar_of(-1, 2));
  CHECK(in_span(ker, {Scalar(-2), Scalar(1)}));

  SparseMatrix<Scalar> id3(3, 3);
  for (int i = 0; i < 3; ++i) id3.set(i, i, 1);
  CHECK(nullspace(id3).empty());

  SparseMatrix<Scalar> z(2, 3);
  CHECK(nullspace(z).size() == 3);
}

TEST_CASE("nullspace exactness and rank-nullity on random sparse matrices") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dim(1, 8), val(-4, 4);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int it = 0; it < 60; ++it) {
    int r = dim(rng), c = dim(rng);
    SparseMatrix<Scalar> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (density(rng) < 0.5) m.set(i, j, Scalar(val(rng)));
    auto ker = nullspace(m);
    CHECK(rank(m) + static_cast<int>(ker.size()) == c);
    for (const auto& v : ker) {
      for (int i = 0; i < r; ++i) {
        Scalar acc = 0;
        for (int j = 0; j < c; ++j) acc += m.get(i, j) * v[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("param_nullspace on the stated shapes") {
  ThetaPoly t = ThetaPoly::theta();

  SUBCASE("diag(theta, 1)") {
    SparseMatrix<ThetaPoly> m(2, 2);
    m.set(0, 0, t);
    m.set(1, 1, ThetaPoly(Scalar(1)));
    auto k = param_nullspace(m);
    CHECK(k.generic_dim == 0);
    REQUIRE(k.special_points.size() == 1);
    CHECK(k.special_points[0].theta0 == 0);
    REQUIRE(k.special_points[0].kernel.size() == 1);
    CHECK(k.special_points[0].kernel[0][0] == 1);
    CHECK(k.special_points[0].kernel[0][1] == 0);
  }

  SUBCASE("1x1 (theta - 2)") {
    SparseMatrix<ThetaPoly> m(1, 1);
    m.set(0, 0, t - ThetaPoly(Scalar(2)));
    auto k = param_nullspace(m);
    CHECK(k.generic_dim == 0);
    REQUIRE(k.special_points.size() == 1);
    CHECK(k.special_points[0].theta0 == 2);
  }

  SUBCASE("1x1 (2 - theta + 2r), r = 1") {
    SparseMatrix<ThetaPoly> m(1, 1);
    m.set(0, 0, ThetaPoly(Scalar(4)) - t);
    auto k = param_nullspace(m);
    REQUIRE(k.special_points.size() == 1);
    CHECK(k.special_points[0].theta0 == 4);
  }
}

TEST_CASE("param_nullspace generic/special consistency on random matrices") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dim(1, 6), val(-3, 3), degd(0, 1);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  ThetaPoly t = ThetaPoly::theta();
  for (int it = 0; it < 40; ++it) {
    int r = dim(rng), c = dim(rng);
    SparseMatrix<ThetaPoly> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (density(rng) < 0.6) {
          ThetaPoly e = ThetaPoly(Scalar(val(rng)));
          if (degd(rng)) e += t * ThetaPoly(Scalar(val(rng)));
          m.set(i, j, e);
        }
    auto k = param_nullspace(m);
    // at a sampled theta away from the special points the kernel dimension
    // equals the generic dimension
    for (Scalar t1 : {Scalar(7), Scalar(11), scalar_of(13, 2)}) {
      bool special = false;
      for (const auto& sp : k.special_points)
        if (sp.theta0 == t1) special = true;
      if (special) continue;
      auto ker = nullspace(specialize(m, t1));
      CHECK(static_cast<int>(ker.size()) == k.generic_dim);
    }
    // generic basis vectors satisfy M v = 0 identically in theta
    for (const auto& gv : k.generic_basis) {
      for (int i = 0; i < r; ++i) {
        ThetaPoly acc;
        for (int j = 0; j < c; ++j) acc += m.get(i, j) * gv.entries[j];
        CHECK(acc.is_zero());
      }
      CHECK(!gv.denominator.is_zero());
    }
    // special kernels solve the specialized system and exceed the generic dim
    for (const auto& sp : k.special_points) {
      auto msp = specialize(m, sp.theta0);
      CHECK(static_cast<int>(sp.kernel.size()) > k.generic_dim);
      for (const auto& v : sp.kernel)
        for (int i = 0; i < r; ++i) {
          Scalar acc = 0;
          for (int j = 0; j < c; ++j) acc += msp.get(i, j) * v[j];
          CHECK(acc == 0);
        }
    }
  }
}
