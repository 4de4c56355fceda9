#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "uac/alcove/alcove.hpp"
#include "uac/core/error.hpp"

using namespace uac;

namespace {

LevelOnePoint pt(const DatumPtr& d, std::vector<Rational> c) { return LevelOnePoint::real(*d, c); }

// W-orbit of a torus point, as a sorted set.
std::set<TorusPoint> orbit(const JQuotient& q, const TorusPoint& t) {
  std::set<TorusPoint> o;
  for (std::size_t a = 0; a < q.finite_order(); ++a) o.insert(q.act(a, t));
  return o;
}

}  // namespace

TEST_CASE("cells in the complex order") {
  auto a1 = CartanDatum::from_label("A1");
  CHECK(cell_of(pt(a1, {Rational(1, 2), Rational(1, 2)})) == NodeSet{0, 1});
  CHECK(cell_of(pt(a1, {1, 0})) == NodeSet{0});
  CHECK_FALSE(cell_of(pt(a1, {2, -1})).has_value());
  // c0 = 1 + i/3, c1 = -i/3: the second coordinate has real part 0 and negative imaginary part
  LevelOnePoint x(*a1, {{1, Rational(1, 3)}, {0, Rational(-1, 3)}});
  CHECK_FALSE(cell_of(x).has_value());
  LevelOnePoint y(*a1, {{1, Rational(-1, 3)}, {0, Rational(1, 3)}});
  CHECK(cell_of(y) == NodeSet{0, 1});
  LevelOnePoint z(*a1, {{Rational(1, 2), Rational(1, 3)}, {Rational(1, 2), Rational(-1, 3)}});
  CHECK(cell_of(z) == NodeSet{0, 1});
  CHECK_THROWS_AS(pt(a1, {1, 1}), Error);
}

TEST_CASE("cells are disjoint on a grid") {
  auto c2 = CartanDatum::from_label("C2");
  for (const auto& x : rational_grid(*c2, {}, 4)) {
    auto s = cell_of(x);
    REQUIRE(s.has_value());
    for (int i = 0; i < c2->size(); ++i) CHECK((x.coords()[i].re > 0) == contains(*s, i));
  }
}

TEST_CASE("translation lattices") {
  auto a1 = CartanDatum::from_label("A1");
  auto q = JQuotient::build(a1, {});
  CHECK(q.rank() == 1);
  CHECK(q.finite_order() == 2);
  auto s0s1 = WeylElement::parse(a1, "s0s1");
  CHECK(q.finite_image(s0s1) == q.identity());
  // L' is generated by the translation part of s0 s1, up to sign.
  auto t = q.apply(s0s1, {1, 0});
  t[0] -= 1;
  auto co = q.coordinates(t);
  CHECK(abs(co[0]) == 1);

  CHECK(JQuotient::build(a1, {0}).rank() == 0);

  auto c2 = CartanDatum::from_label("C2");
  auto qc = JQuotient::build(c2, {1});
  CHECK(qc.rank() == 1);
  CHECK(qc.finite_order() == 2);
  auto g = qc.generators().generators;
  auto prod = g[0].element * g[1].element;
  CHECK(qc.finite_image(prod) == qc.identity());
  std::vector<Rational> base(2, 0);
  base[0] = 1;
  auto tp = qc.apply(prod, base);
  tp[0] -= 1;
  CHECK(abs(qc.coordinates(tp)[0]) == 1);

  auto a2 = CartanDatum::from_label("A2");
  auto qa = JQuotient::build(a2, {});
  CHECK(qa.rank() == 2);
  CHECK(qa.finite_order() == 6);
  auto g2 = CartanDatum::from_label("G2");
  CHECK(JQuotient::build(g2, {}).finite_order() == 12);
}

TEST_CASE("finite quotient preserves L' and the level-0 space") {
  for (const char* label : {"A1", "A2", "C2", "G2", "B3"}) {
    auto d = CartanDatum::from_label(label);
    auto q = JQuotient::build(d, {});
    for (std::size_t a = 0; a < q.finite_order(); ++a) {
      const auto& f = q.linear_part(a);
      for (std::size_t c = 0; c < q.rank(); ++c) {
        auto img = f * q.lattice_basis().col(c);
        Rational lvl = 0;
        for (std::size_t i = 0; i < img.size(); ++i) lvl += d->mark(q.jcheck()[i]) * img[i];
        CHECK(lvl == 0);
      }
      for (std::size_t b = 0; b < q.finite_order(); ++b)
        CHECK(q.linear_part(q.multiply(a, b)) == q.linear_part(a) * q.linear_part(b));
    }
  }
}

TEST_CASE("p_J examples") {
  auto a1 = CartanDatum::from_label("A1");
  auto q = JQuotient::build(a1, {});
  CHECK(p_j(q, pt(a1, {1, 0})).is_identity());
  // d = (1/2,1/2): x = (-1/2,1/2) is a quarter of the generator of L'
  CHECK(p_j(q, pt(a1, {Rational(1, 2), Rational(1, 2)})).order() == 4);
  CHECK(p_j(q, pt(a1, {0, 1})).order() == 2);
  LevelOnePoint cx(*a1, {{Rational(1, 2), Rational(1, 3)}, {Rational(1, 2), Rational(-1, 3)}});
  CHECK_THROWS_AS(p_j(q, cx), Error);
}

TEST_CASE("stabilizers and lift check") {
  auto a1 = CartanDatum::from_label("A1");
  auto q = JQuotient::build(a1, {});
  auto st = torus_stabilizer(q, p_j(q, pt(a1, {1, 0})), NodeSet{0});
  CHECK(st.elements.size() == 2);
  REQUIRE(st.lift);
  CHECK(st.lift->ok);
  CHECK(st.lift->subgroup_order == 2);
  auto mid = torus_stabilizer(q, p_j(q, pt(a1, {Rational(1, 2), Rational(1, 2)})), NodeSet{0, 1});
  CHECK(mid.elements.size() == 1);
  CHECK(mid.lift->ok);
  auto qt = JQuotient::build(a1, {1});
  CHECK(torus_stabilizer(qt, p_j(qt, pt(a1, {1, 0}))).elements.size() == 1);
}

TEST_CASE("grid: lift check, injectivity, equivariance") {
  for (auto [label, j] : std::vector<std::pair<const char*, NodeSet>>{{"A1", {}}, {"A2", {}}, {"C2", {1}}, {"G2", {}}}) {
    CAPTURE(label);
    auto d = CartanDatum::from_label(label);
    auto q = JQuotient::build(d, j);
    std::set<std::set<TorusPoint>> orbits;
    auto grid = rational_grid(*d, j, 6);
    for (const auto& x : grid) {
      auto s = cell_of(x);
      auto t = p_j(q, x);
      auto st = torus_stabilizer(q, t, s);
      CHECK(st.lift->ok);
      orbits.insert(orbit(q, t));
      for (const auto& g : q.generators().generators) {
        auto wx = q.apply(g.element, [&] {
          std::vector<Rational> v;
          for (int k : q.jcheck()) v.push_back(x.coords()[k].re);
          return v;
        }());
        std::vector<Rational> full(d->size(), Rational(0));
        for (std::size_t i = 0; i < q.jcheck().size(); ++i) full[q.jcheck()[i]] = wx[i];
        // p_J extends to all of z^1_J by the same formula
        std::vector<Rational> xv = wx;
        int k = default_k(*d, j);
        for (std::size_t i = 0; i < q.jcheck().size(); ++i)
          if (q.jcheck()[i] == k) xv[i] -= Rational(1, d->mark(k));
        TorusPoint lhs(q.coordinates(xv));
        CHECK(lhs == q.act(q.finite_image(g.element), t));
      }
    }
    CHECK(orbits.size() == grid.size());
  }
}
