#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uac/core/error.hpp"
#include "uac/reps/reps.hpp"

using namespace uac;

namespace {

std::shared_ptr<const JQuotient> quotient(const std::string& label, NodeSet j) {
  return std::make_shared<const JQuotient>(JQuotient::build(CartanDatum::from_label(label), std::move(j)));
}

std::size_t stabilizer_gens(const JQuotient& q, const LevelOnePoint& d) {
  auto s = *cell_of(d);
  std::size_t n = 0;
  for (const auto& g : q.generators().generators)
    if (!contains(s, g.node)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  auto i = Cyclotomic::zeta(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(2, 1) == Cyclotomic(-1));
  auto w = Cyclotomic::zeta(3, 1);
  CHECK(Cyclotomic(1) + w + w * w == Cyclotomic(0));
  CHECK(w.conj() == w * w);
  CHECK((w * i).conductor() == 12);
  CHECK(Cyclotomic::zeta(12, 4) == w);
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(-1));
  Cyclotomic sum;
  for (int k = 0; k < 7; ++k) sum += Cyclotomic::zeta(7, k);
  CHECK(sum.is_zero());
  CHECK((w * w.conj()).rational_value() == 1);
  CHECK_THROWS_AS(w.rational_value(), Error);
  CHECK(Cyclotomic(Rational(1, 2)).to_string() == "1/2");
  CHECK((-i).to_string() == "-z4");
}

TEST_CASE("A1 irreducibles") {
  auto q = quotient("A1", {});
  const auto& datum = q->datum();
  SUBCASE("vertex, trivial rho") {
    auto d = LevelOnePoint::real(datum, {1, 0});
    auto e = build_irreducible(q, d, SubgroupRep::trivial(1));
    CHECK(e.dim() == 1);
    const auto& g = e.group();
    CHECK(e.character(g.affine_a1_generator(0)) == Cyclotomic(1));
    CHECK(e.character(g.affine_a1_generator(1)) == Cyclotomic(1));
    CHECK(e.character(g.lattice(0)) == Cyclotomic(1));
    CHECK(e.mackey_norm() == 1);
  }
  SUBCASE("midpoint") {
    auto d = LevelOnePoint::real(datum, {Rational(1, 2), Rational(1, 2)});
    auto e = build_irreducible(q, d, SubgroupRep::trivial(0));
    CHECK(e.dim() == 2);
    CHECK(e.index() == 2);
    const auto& g = e.group();
    CHECK(e.character(g.identity()) == Cyclotomic(2));
    CHECK(e.character(g.affine_a1_generator(1)).is_zero());
    CHECK(e.character(g.affine_a1_generator(0)).is_zero());
    // order-4 point: chi(l) + chi(-l) = i + (-i)
    CHECK(e.character(g.lattice(0)).is_zero());
    auto l2 = g.multiply(g.lattice(0), g.lattice(0));
    CHECK(e.character(l2) == Cyclotomic(-2));
    CHECK(e.mackey_norm() == 1);
  }
  SUBCASE("rho must match the stabilizer") {
    auto d = LevelOnePoint::real(datum, {1, 0});
    CHECK_THROWS_AS(build_irreducible(q, d, SubgroupRep::trivial(0)), Error);
    SubgroupRep bad{1, {CMatrix(1, 1, Cyclotomic(2))}};
    CHECK_THROWS_AS(build_irreducible(q, d, bad), Error);
  }
  SUBCASE("complex d") {
    LevelOnePoint d(datum, {{Rational(1, 2), Rational(1, 3)}, {Rational(1, 2), Rational(-1, 3)}});
    try {
      build_irreducible(q, d, SubgroupRep::trivial(0));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kUnsupportedRegime);
    }
  }
}

TEST_CASE("characters are class functions and one-dim characters are the pairing") {
  auto q = quotient("A1", {});
  auto d = LevelOnePoint::real(q->datum(), {Rational(1, 3), Rational(2, 3)});
  auto e = build_irreducible(q, d, SubgroupRep::trivial(0));
  const auto& g = e.group();
  std::vector<SemidirectElement> sample;
  for (std::string w : {"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2s1"}) sample.push_back(g.affine_a1_word(w));
  for (const auto& x : sample)
    for (const auto& y : sample) CHECK(e.character(g.multiply(g.multiply(y, x), g.inverse(y))) == e.character(x));

  auto v = LevelOnePoint::real(q->datum(), {0, 1});
  auto one = build_irreducible(q, v, SubgroupRep::sign(1));
  REQUIRE(one.dim() == 1);
  // t = 1/2 on the lattice generator
  CHECK(one.character(g.lattice(0)) == Cyclotomic::zeta(2, 1));
}

TEST_CASE("Mackey norm on grids") {
  for (auto [label, j, den] : {std::tuple<std::string, NodeSet, int>{"A1", {}, 6}, {"A2", {}, 3}, {"C2", {1}, 4}}) {
    auto q = quotient(label, j);
    for (const auto& d : rational_grid(q->datum(), j, den)) {
      const std::size_t n = stabilizer_gens(*q, d);
      for (const auto& rho : {SubgroupRep::trivial(n), SubgroupRep::sign(n)}) {
        auto e = build_irreducible(q, d, rho);
        CHECK(e.dim() * (q->finite_order() / e.index()) == q->finite_order());
        CHECK(e.mackey_norm() == 1);
      }
    }
  }
}

TEST_CASE("co-standard A1 table") {
  auto data = load_costandard(CoStandardTable::parse(builtin_a1_costandard_text()));
  CHECK(data.top_level == 2);
  REQUIRE(data.lower.size() == 1);
  CHECK(data.lower[0].irrep == "triv");
  CHECK(data.lower[0].cls == "reg");
  // round trip
  auto again = CoStandardTable::parse(data.table.render());
  CHECK(again.render() == data.table.render());
}

TEST_CASE("swapped table is rejected at the top layer") {
  try {
    load_costandard(CoStandardTable::parse(swapped_a1_costandard_text()));
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kTableRejected);
    CHECK(std::string(e.what()).find("layer 2") != std::string::npos);
  }
}

TEST_CASE("trivial table and broken tables") {
  const char* triv = "group affine-A1\nspringer SL2\ntop S={0} d=1,0 class=1 system=triv\ndim 1\n"
                     "gen s1\n-1\ngen s2\n-1\nlayer 0\n1\n";
  auto data = load_costandard(CoStandardTable::parse(triv));
  CHECK(data.top_level == 0);
  CHECK(data.lower.empty());

  std::string unstable(builtin_a1_costandard_text());
  unstable.replace(unstable.find("layer 2\n1 0"), 11, "layer 2\n0 1");
  CHECK_THROWS_AS(load_costandard(CoStandardTable::parse(unstable)), Error);

  std::string nozero(builtin_a1_costandard_text());
  nozero.replace(nozero.find("layer 0"), 7, "layer 1");
  CHECK_THROWS_AS(load_costandard(CoStandardTable::parse(nozero)), Error);

  CHECK_THROWS_AS(CoStandardTable::parse("group affine-A1\ndim 2\ngen s1\n1 0\n"), Error);
}

TEST_CASE("almost characters on finite-order elements") {
  auto a1 = CartanDatum::from_label("A1");
  auto s1 = ExtendedWeylElement(WeylElement::parse(a1, "s1"));
  CHECK(almost_char_cvr("({1},C)", s1).is_zero());
  CHECK(almost_char_cvr("({1},C)", ExtendedWeylElement(WeylElement(a1))) == Cyclotomic(2));
  auto c = ExtendedWeylElement(WeylElement::parse(a1, "s1s0s1"));
  auto s0 = ExtendedWeylElement(WeylElement::parse(a1, "s0"));
  CHECK(almost_char_cvr("({1},C)", c) == almost_char_cvr("({1},C)", s0));
  auto om = omega_group(*a1);
  ExtendedWeylElement x(om[1], WeylElement(a1));
  CHECK(almost_char_cvr("({1},C)", x) == Cyclotomic(0));
  CHECK_THROWS_AS(almost_char_cvr("({1},C)", ExtendedWeylElement(WeylElement::parse(a1, "s0s1"))), Error);
  CHECK_THROWS_AS(almost_char_cvr("(reg,eps)", s1), Error);
}

TEST_CASE("Omega induction") {
  auto a1 = CartanDatum::from_label("A1");
  GeneratorRep triv{a1, 1, {CMatrix::identity(1), CMatrix::identity(1)}, {}, {}};
  triv.verify();
  auto om = omega_group(*a1);
  auto same = omega_induce(triv, {om[0]});
  CHECK(same.dim == 1);
  CHECK(same.nodes == triv.nodes);

  auto ind = omega_induce(triv, om);
  CHECK(ind.dim == 2);
  ExtendedWeylElement xi(om[1], WeylElement(a1));
  CHECK(trace(ind.image(xi)).is_zero());
  ExtendedWeylElement xis1(om[1], WeylElement::parse(a1, "s1"));
  CHECK(trace(ind.image(xis1)).is_zero());
  // restriction contains the original module: the xi = 1 block
  CHECK(ind.nodes[0](0, 0) == Cyclotomic(1));

  CMatrix sgn(1, 1, Cyclotomic(-1));
  GeneratorRep mixed{a1, 1, {CMatrix::identity(1), sgn}, {}, {}};
  auto m2 = omega_induce(mixed, om);
  CHECK(trace(m2.nodes[0]).is_zero());
  CHECK(trace(m2.nodes[1]).is_zero());
}

TEST_CASE("kernel idempotents for the order-two kernel case") {
  auto d6 = CartanDatum::from_label("D6");
  DiagramAutomorphism sigma5({5, 6, 4, 3, 2, 0, 1});
  auto r = kernel_idempotent_check(d6, {3}, sigma5);
  CHECK(r.kernel_order == 2);
  CHECK_MESSAGE(r.ok, r.detail);
  CHECK(r.summand_dim * 2 == r.group_order);
}

TEST_CASE("kernel idempotent check reports the trivial-kernel case") {
  auto a1 = CartanDatum::from_label("A1");
  auto r = kernel_idempotent_check(a1, {}, omega_group(*a1)[0]);
  CHECK_FALSE(r.ok);
  CHECK(r.kernel_order == 1);
}
