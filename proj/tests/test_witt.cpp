#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "uac/core/error.hpp"
#include "uac/witt/lattice.hpp"
#include "uac/witt/witt.hpp"

using namespace uac;

TEST_CASE("Witt ring basics") {
  auto w = WittRing::make(5, 2);
  WittScalar one = WittScalar::one(w);
  for (int a0 = 0; a0 < 5; ++a0)
    for (int a1 = 0; a1 < 5; ++a1) {
      WittScalar a(w, {a0, a1});
      CHECK(one * a == a);
      CHECK(a + WittScalar::zero(w) == a);
      CHECK(a - a == WittScalar::zero(w));
    }
  auto five = WittScalar(w, w->from_int(5));
  CHECK(five.components()[0] == 0);
  CHECK(five.components()[1] != 0);
  CHECK(witt_to_int(*w, five.components()) == 5);
  // first sum polynomial is x0 + y0
  CHECK(w->sum_poly(0).size() == 2);
  CHECK(WittScalar::parse(w, "(3, 4)").to_string() == "(3,4)");
  CHECK_THROWS_AS(WittScalar::parse(w, "(3,9)"), Error);
  CHECK_THROWS_AS(WittScalar::parse(w, "3,4"), Error);
  CHECK_THROWS_AS(one + WittScalar::one(WittRing::make(3, 2)), Error);
}

TEST_CASE("W_m(F_p) is Z/p^m") {
  for (auto [p, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{5, 2}, std::pair{3, 3}, std::pair{2, 3}}) {
    auto rep = witt_oracle_sweep(p, m, true);
    CHECK(rep.ok());
    CHECK(rep.pairs == [&] { long s = 1; for (int i = 0; i < 2 * m; ++i) s *= p; return s; }());
    auto serial = witt_oracle_sweep(p, m, false);
    CHECK(serial.mismatches == rep.mismatches);
  }
}

TEST_CASE("Witt vectors over F_4 and F_9 form a ring") {
  for (int q : {4, 9}) {
    auto w = WittRing::make(q, 2);
    std::mt19937 rng(q);
    std::uniform_int_distribution<int> d(0, q - 1);
    for (int t = 0; t < 100; ++t) {
      WittScalar a(w, {d(rng), d(rng)}), b(w, {d(rng), d(rng)}), c(w, {d(rng), d(rng)});
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
    }
    // p * 1 = (0, 1)
    CHECK(WittScalar(w, w->from_int(w->p())).components() == std::vector<int>{0, 1});
  }
}

TEST_CASE("canonical form and Smith invariants") {
  // p o / p^2 o in o / p^2 o
  LatticeSubmodule z(3, 2, 1, {{3}});
  CHECK(z.d() == 1);
  CHECK(z.quotient_d() == 1);
  LatticeSubmodule full(3, 2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(full.d() == 6);
  LatticeSubmodule zero(3, 2, 3, {});
  CHECK(zero.d() == 0);
  CHECK(zero.quotient_d() == 6);
  // generating sets of the same module give the same canonical form
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(0, 8);
  for (int t = 0; t < 200; ++t) {
    std::vector<IVec> gens(2, IVec(3));
    for (auto& g : gens)
      for (auto& x : g) x = d(rng);
    LatticeSubmodule a(3, 2, 3, gens);
    auto gens2 = gens;
    gens2.push_back({gens[0][0] + 2 * gens[1][0], gens[0][1] + 2 * gens[1][1], gens[0][2] + 2 * gens[1][2]});
    std::swap(gens2[0], gens2[2]);
    LatticeSubmodule b(3, 2, 3, gens2);
    CHECK(a == b);
    // brute-force cardinality
    std::set<IVec> elems;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        IVec v(3);
        for (int k = 0; k < 3; ++k) v[k] = ((i * gens[0][k] + j * gens[1][k]) % 9);
        elems.insert(v);
      }
    long size = 1;
    for (int i = 0; i < a.d(); ++i) size *= 3;
    CHECK(static_cast<long>(elems.size()) == size);
    CHECK(a.d() + a.quotient_d() == 6);
    for (const auto& v : elems) CHECK(a.contains(v));
    CHECK(a.contains(gens2[0]));
    for (const auto& r : a.rows()) CHECK(a.contains(r));
  }
}

TEST_CASE("submodule census") {
  // subgroups of (Z/p)^2: 1 + (p+1) + 1
  CHECK(enumerate_submodules(3, 1, 2).size() == 6);
  CHECK(enumerate_submodules(5, 1, 2).size() == 8);
  // subgroups of Z/p^2 x Z/p^2 for p = 2: 15
  CHECK(enumerate_submodules(2, 2, 2).size() == 15);
  CHECK(enumerate_submodules(3, 2, 3, -1, true) == enumerate_submodules(3, 2, 3, -1, false));
  CHECK_THROWS_AS(enumerate_submodules(5, 4, 3, -1, true, 1000), Error);
}

TEST_CASE("sl2 datum and sharp") {
  auto g = LieLatticeDatum::sl2(3);
  CHECK(g.gram == std::vector<IVec>{{0, 0, 4}, {0, 8, 0}, {4, 0, 0}});
  CHECK_THROWS_AS(LieLatticeDatum::sl2(2), Error);
  // image of L0 in V_1: u = p x, so pL0 = span(3 e_i)
  LatticeSubmodule l0(3, 2, 3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  CHECK(sharp(g, l0) == l0);
  CHECK(is_self_dual_isotropic(g, 1, l0));
  CHECK(is_lie_closed(g, 1, l0));
  CHECK(lattice_lie_closed(g, 1, l0));
  LatticeSubmodule v1(3, 2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(is_self_dual_isotropic(g, 1, v1));
  // sharp(p L0) = p^-1 L0: the zero submodule goes to everything
  LatticeSubmodule zero(3, 2, 3, {});
  CHECK(sharp(g, zero) == v1);
  CHECK(sharp(g, v1) == zero);
  // involution, order reversing, duality step
  auto all = enumerate_submodules(3, 2, 3);
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto& z = all[rng() % all.size()];
    const auto& y = all[rng() % all.size()];
    auto zs = sharp(g, z);
    CHECK(sharp(g, zs) == z);
    CHECK(z.d() == zs.quotient_d());
    bool sub = true;
    for (const auto& r : y.rows()) sub &= z.contains(r);
    if (sub) {
      auto ys = sharp(g, y);
      for (const auto& r : zs.rows()) CHECK(ys.contains(r));
    }
  }
}

TEST_CASE("X_n and the bijections") {
  auto g = LieLatticeDatum::sl2(3);
  auto x0 = enumerate_X_n(g, 0);
  CHECK(x0.direct.size() == 1);
  CHECK(x0.e_prime0.size() == 1);
  auto x1 = enumerate_X_n(g, 1);
  CHECK(x1.bijection_e);
  CHECK(x1.bijection_x);
  CHECK(x1.duality);
  CHECK(x1.direct.size() == x1.e_prime0.size());
  CHECK(!x1.direct.empty());
  // X_0 inside X_1: L0 is pL0 in the n = 1 coordinates
  LatticeSubmodule l0(3, 2, 3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  CHECK(std::find(x1.direct.begin(), x1.direct.end(), l0) != x1.direct.end());
  for (const auto& z : x1.e_prime) CHECK(z.d() == 3);
  MESSAGE("p=3 n=1: |E'| = " << x1.e_prime.size() << ", |E'_0| = " << x1.e_prime0.size()
                             << ", lattices = " << x1.candidates);
  auto serial = enumerate_X_n(g, 1, false);
  CHECK(serial.direct == x1.direct);
  CHECK(serial.e_prime0 == x1.e_prime0);
}

TEST_CASE("trilinear test") {
  auto g = LieLatticeDatum::sl2(3);
  // for sl2 at p = 3 every self-dual lattice with n <= 2 is a Lie subring
  for (int n : {1, 2}) {
    auto x = enumerate_X_n(g, n);
    CHECK(x.e_prime.size() == x.e_prime0.size());
    CHECK(x.bijection_x);
    for (const auto& z : x.e_prime) CHECK(lattice_lie_closed(g, n, z));
  }
  // the whole of V_1, i.e. p^-1 L0, fails
  LatticeSubmodule v1(3, 2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(is_lie_closed(g, 1, v1));
  CHECK_FALSE(lattice_lie_closed(g, 1, v1));
  // e and p^-1 h: bracket -2 p^-1 e is not in the lattice
  LatticeSubmodule z(3, 2, 3, {{3, 0, 0}, {0, 1, 0}, {0, 0, 3}});
  CHECK_FALSE(lattice_lie_closed(g, 1, z));
}

TEST_CASE("X_1 at p = 5") {
  auto g = LieLatticeDatum::sl2(5);
  auto x1 = enumerate_X_n(g, 1);
  CHECK(x1.bijection_e);
  CHECK(x1.bijection_x);
  CHECK(x1.duality);
  MESSAGE("p=5 n=1: |E'_0| = " << x1.e_prime0.size());
}

TEST_CASE("Borel fiber") {
  for (int q : {3, 5, 9}) {
    const int p = q == 9 ? 3 : q;
    auto g = LieLatticeDatum::sl2(p);
    LatticeSubmodule l0(p, 2, 3, {{p, 0, 0}, {0, p, 0}, {0, 0, p}});
    CHECK(borel_fiber_count(g, 1, l0, q) == q + 1);
  }
  auto g = LieLatticeDatum::sl2(3);
  LatticeSubmodule l0(3, 0, 3, {});
  CHECK(borel_fiber_count(g, 0, l0, 3) == 4);
  CHECK_THROWS_AS(borel_fiber_count(g, 0, l0, 5), Error);
}
