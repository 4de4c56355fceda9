#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uac/core/error.hpp"
#include "uac/fourier/fourier.hpp"

using namespace uac;

namespace {

Matrix<Cyclotomic> half_matrix(std::vector<std::vector<int>> signs) {
  Matrix<Cyclotomic> m(signs.size(), signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i)
    for (std::size_t j = 0; j < signs.size(); ++j) m(i, j) = Cyclotomic(Rational(signs[i][j], 2));
  return m;
}

}  // namespace

TEST_CASE("finite groups") {
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.size() == 6);
  CHECK(s3.classes().size() == 3);
  CHECK(s3.exponent() == 6);
  CHECK(s3.center().size() == 1);
  auto k = curated_group("Z2xZ2");
  CHECK(k.classes().size() == 4);
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {0, 1}}), Error);
  auto parsed = FiniteGroup::parse("group Z2\nrow 0 1\nrow 1 0\nlabel 1 r\n");
  CHECK(parsed.size() == 2);
  CHECK(parsed.label(1) == "r");
  CHECK_THROWS_AS(curated_group("A5"), Error);
}

TEST_CASE("character tables") {
  for (std::string name : {"1", "Z2", "Z3", "S3", "Z2xZ2"}) {
    CharacterTable t(curated_group(name));
    CHECK(t.size() == t.group().classes().size());
    long sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) sum += t.degree(i) * t.degree(i);
    CHECK(sum == t.group().size());
  }
  CharacterTable s3(FiniteGroup::symmetric(3));
  CHECK(s3.degree(0) == 1);
  CHECK(s3.degree(1) == 1);
  CHECK(s3.degree(2) == 2);
  CharacterTable z3(FiniteGroup::cyclic(3));
  CHECK((z3.value(1, 1) == Cyclotomic::zeta(3, 1).conj() || z3.value(1, 1) == Cyclotomic::zeta(3, 1)));
  auto q8 = FiniteGroup::parse(
      // quaternion group: 1,-1,i,-i,j,-j,k,-k
      "group Q8\n"
      "row 0 1 2 3 4 5 6 7\nrow 1 0 3 2 5 4 7 6\nrow 2 3 1 0 6 7 5 4\nrow 3 2 0 1 7 6 4 5\n"
      "row 4 5 7 6 1 0 2 3\nrow 5 4 6 7 0 1 3 2\nrow 6 7 4 5 3 2 1 0\nrow 7 6 5 4 2 3 0 1\n");
  CharacterTable tq(q8);
  CHECK(tq.size() == 5);
  CHECK(tq.degree(4) == 2);
}

TEST_CASE("M sets") {
  CHECK(m_set(curated_group("Z2")).size() == 4);
  CHECK(m_set(curated_group("S3")).size() == 8);
  CHECK(m_set(curated_group("Z2xZ2")).size() == 16);
  CHECK(m_set(curated_group("1")).size() == 1);
}

TEST_CASE("Z/2 matrix reproduces the B2 identities") {
  FourierData z2(curated_group("Z2"));
  // rows and columns in the order (1,1),(r,1),(1,e),(r,e)
  const std::vector<std::string> order{"(0,1)", "(1,1)", "(0,chi1)", "(1,chi1)"};
  const auto expect = half_matrix({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}});
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) CHECK(z2.matrix()(z2.index_of(order[a]), z2.index_of(order[b])) == expect(a, b));
  std::vector<Cyclotomic> delta(4, Cyclotomic(0));
  delta[z2.index_of("(0,1)")] = 1;
  for (const auto& v : z2.apply(delta)) CHECK(v == Cyclotomic(Rational(1, 2)));
}

TEST_CASE("pairing matrices are symmetric involutions") {
  for (std::string name : {"1", "Z2", "S3", "Z2xZ2"}) {
    FourierData f(curated_group(name));
    const auto& m = f.matrix();
    CHECK_MESSAGE(m * m == Matrix<Cyclotomic>::identity(m.rows()), name);
    CHECK_MESSAGE(m == m.transpose(), name);
    // the (1,1) row is positive
    for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m(0, j).rational_value() > 0);
  }
  CHECK(pairing_matrix(curated_group("1"))(0, 0) == Cyclotomic(1));
}

TEST_CASE("non-real characters give a hermitian involution") {
  FourierData f(curated_group("Z3"));
  const auto& m = f.matrix();
  CHECK(m * m == Matrix<Cyclotomic>::identity(9));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) CHECK(m(i, j) == m(j, i).conj());
  CHECK_FALSE(m == m.transpose());
}

TEST_CASE("S3 matrix entries") {
  FourierData f(curated_group("S3"));
  const auto& m = f.matrix();
  // classes 1, (12), (123); characters by degree
  const std::vector<Rational> row{Rational(1, 6), Rational(1, 6), Rational(1, 3), Rational(1, 2),
                                  Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  for (std::size_t j = 0; j < 8; ++j) CHECK(m(0, j) == Cyclotomic(row[j]));
}

TEST_CASE("transform is an involution on random vectors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (std::string name : {"Z2", "S3"}) {
    FourierData f(curated_group(name));
    std::vector<Cyclotomic> phi;
    for (std::size_t i = 0; i < f.pairs().size(); ++i) phi.push_back(Cyclotomic(Rational(dist(rng), 1 + std::abs(dist(rng)))));
    CHECK(f.apply(f.apply(phi)) == phi);
  }
  FourierData z2(curated_group("Z2"));
  CHECK_THROWS_AS(z2.apply({Cyclotomic(1)}), Error);
}

TEST_CASE("restriction to trivial central character") {
  FourierData z2(curated_group("Z2"));
  CHECK(z2.restricted(0).size() == 4);
  auto r = z2.restricted(1);  // characters trivial on r
  CHECK(r.size() == 2);
  FourierData s3(curated_group("S3"));
  CHECK(s3.restricted(0).size() == 8);
  // block structure: the restricted index set is closed under the transform for Z/2 x Z/2 with central (1,0)
  FourierData k(curated_group("Z2xZ2"));
  CHECK(k.restricted(0).size() == 16);
}

TEST_CASE("B2 model and the symmetry instance") {
  const auto m = b2_matrix();
  CHECK(m.rows() == 6);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Cyclotomic> phi(6);
    for (auto& x : phi) x = Cyclotomic(dist(rng));
    phi[4] = phi[0];  // phi(-1,1) = phi(1,1)
    phi[5] = phi[2];  // phi(-1,e) = phi(1,e)
    auto tau = b2_transform(phi);
    CHECK(tau[4] == tau[0]);
    CHECK(tau[5] == tau[2]);
    CHECK(tau[0] * Cyclotomic(2) == phi[0] + phi[1] + phi[2] + phi[3]);
    CHECK(tau[3] * Cyclotomic(2) == phi[0] - phi[1] - phi[2] + phi[3]);
  }
}
