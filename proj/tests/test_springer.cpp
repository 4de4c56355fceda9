#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "uac/core/error.hpp"
#include "uac/springer/springer.hpp"

using namespace uac;

TEST_CASE("SL2 blocks") {
  const auto& t = springer_table("SL2");
  REQUIRE(t.blocks().size() == 2);
  const auto* p = t.find("reg", "triv");
  REQUIRE(p);
  CHECK(p->irrep == "triv");
  CHECK(t.find("1", "triv")->irrep == "sign");
  CHECK(t.block_of("reg", "triv").name == "principal");
  const auto& cusp = t.block_of("reg", "eps");
  CHECK(cusp.cuspidal.j == NodeSet{1});
  CHECK(cusp.central == -1);
  CHECK(cusp.pairs.size() == 1);
  CHECK(cusp.pairs[0].irrep == "triv");
  CHECK(t.find("1", "eps") == nullptr);
}

TEST_CASE("torus table and unknown groups") {
  const auto& t = springer_table("T");
  REQUIRE(t.blocks().size() == 1);
  CHECK(t.blocks()[0].pairs.size() == 1);
  CHECK(t.find("1", "triv")->irrep == "triv");
  CHECK(t.find_class("reg").name == "1");
  try {
    springer_table("G2");
    FAIL("expected not-curated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotCurated);
  }
}

TEST_CASE("each pair lies in exactly one block; counts agree") {
  for (const auto& g : curated_springer_groups()) {
    const auto& t = springer_table(g);
    std::multiset<std::pair<std::string, std::string>> seen;
    std::size_t irreps = 0;
    for (const auto& b : t.blocks()) {
      irreps += b.pairs.size();
      for (const auto& p : b.pairs) seen.emplace(p.cls, p.system);
    }
    for (const auto& x : seen) CHECK(seen.count(x) == 1);
    CHECK(seen.size() == irreps);
  }
  // SL2: (1,triv), (reg,triv), (reg,eps) against triv, sign of S2 and the cuspidal triv
  CHECK(springer_table("SL2").blocks()[0].pairs.size() + springer_table("SL2").blocks()[1].pairs.size() == 3);
}

TEST_CASE("cuspidal data pass the coset generator check") {
  auto a1 = CartanDatum::from_label("A1");
  for (const auto& b : springer_table("SL2").blocks()) CHECK(min_coset_generators(a1, b.cuspidal.j).ok());
}

TEST_CASE("closure order") {
  const auto& t = springer_table("SL2");
  CHECK(t.closure_leq("1", "reg"));
  CHECK(t.closure_less("1", "reg"));
  CHECK(t.closure_leq("reg", "reg"));
  CHECK_FALSE(t.closure_less("reg", "reg"));
  CHECK_FALSE(t.closure_leq("reg", "1"));
  CHECK_THROWS_AS(t.closure_leq("1", "subreg"), Error);
}

TEST_CASE("data file matches the built-in table") {
  std::ifstream in(std::string(UAC_TEST_DATA_DIR) + "/springer_sl2.txt");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == std::string(builtin_springer_text()));
}

TEST_CASE("z labels") {
  auto a1 = CartanDatum::from_label("A1");
  auto mid = LevelOnePoint::real(*a1, {Rational(1, 2), Rational(1, 2)});
  auto z = assemble_z_label(a1, mid, "reg", "triv");
  CHECK(z.cls.group == "T");
  CHECK(z.semisimple.order() == 4);
  CHECK(z.s == NodeSet{0, 1});

  auto vertex = LevelOnePoint::real(*a1, {1, 0});
  auto u = assemble_z_label(a1, vertex, "reg", "triv");
  CHECK(u.cls.group == "SL2");
  CHECK(u.semisimple.is_identity());
  CHECK(u.central == 1);
  auto c = assemble_z_label(a1, vertex, "reg", "eps");
  CHECK(c.central == -1);
  CHECK_THROWS_AS(assemble_z_label(a1, vertex, "1", "eps"), Error);
  CHECK_THROWS_AS(assemble_z_label(a1, mid, "1", "eps"), Error);
}

TEST_CASE("z labels are injective on a grid") {
  auto a1 = CartanDatum::from_label("A1");
  std::vector<ZLabel> all;
  for (const auto& d : rational_grid(*a1, {}, 6)) {
    const auto s = *cell_of(d);
    const auto& t = springer_table(centralizer_group(*a1, s));
    for (const auto& b : t.blocks())
      for (const auto& p : b.pairs) all.push_back(assemble_z_label(a1, d, p.cls, p.system));
  }
  CHECK(all.size() > 10);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
}

TEST_CASE("central character matches iota") {
  auto a1 = CartanDatum::from_label("A1");
  for (const auto& b : springer_table("SL2").blocks()) {
    auto w = omega_for_central(*a1, b.central);
    // the principal block sits over omega = 1, the cuspidal block over the swap
    CHECK(w.is_identity() == (b.central == 1));
  }
}
