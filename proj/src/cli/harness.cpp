#include "uac/cli/harness.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "uac/alcove/alcove.hpp"
#include "uac/core/error.hpp"
#include "uac/coxeter/weyl.hpp"
#include "uac/fourier/fourier.hpp"
#include "uac/pgl2/pgl2.hpp"
#include "uac/reps/reps.hpp"
#include "uac/springer/springer.hpp"
#include "uac/witt/lattice.hpp"
#include "uac/witt/witt.hpp"

namespace uac {

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> s{"coxeter", "alcove", "reps", "springer", "fourier", "pgl2", "witt"};
  return s;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

int to_int(const std::string& v, int line, const std::string& key) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": '" + key + "' needs an integer, got '" + v + "'");
}

void validate(const SuiteConfig& c) {
  auto usage = [](const std::string& m) { throw Error(ErrorKind::kUsage, m); };
  if (!is_prime_power(c.q) || c.q > 256) usage("q=" + std::to_string(c.q) + " is not a prime power in [2,256]");
  if (!is_prime(c.p) || c.p < 3 || c.p > 7) usage("p=" + std::to_string(c.p) + " must be an odd prime <= 7");
  if (c.n < 0 || c.n > 2) usage("n must lie in [0,2]");
  if (c.prec < 2 || c.prec > 64) usage("prec must lie in [2,64]");
  if (c.window < 2 || c.window > 64) usage("window must lie in [2,64]");
  if (c.order_cap < 2 || c.order_cap > 1000) usage("order_cap must lie in [2,1000]");
  if (c.format != "tsv" && c.format != "text") usage("format must be tsv or text");
}

}  // namespace

SuiteConfig default_config() {
  SuiteConfig c;
  c.suites = known_suites();
  return c;
}

SuiteConfig parse_config(std::string_view text) {
  SuiteConfig c;
  std::vector<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::vector<std::string> chosen;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto sp = s.find_first_of(" \t");
    const std::string key = s.substr(0, sp);
    const std::string value = sp == std::string::npos ? "" : trim(s.substr(sp));
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      c.warnings.push_back("line " + std::to_string(line) + ": duplicate key '" + key + "', last value wins");
    seen.push_back(key);
    if (key == "suite") {
      chosen.clear();
      std::string v = value;
      std::replace(v.begin(), v.end(), ',', ' ');
      std::istringstream vs(v);
      std::string name;
      while (vs >> name) {
        if (name == "all") {
          chosen = known_suites();
          continue;
        }
        if (std::find(known_suites().begin(), known_suites().end(), name) == known_suites().end())
          throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": unknown suite '" + name + "'");
        chosen.push_back(name);
      }
    } else if (key == "q") {
      c.q = to_int(value, line, key);
    } else if (key == "p") {
      c.p = to_int(value, line, key);
    } else if (key == "n") {
      c.n = to_int(value, line, key);
    } else if (key == "prec") {
      c.prec = to_int(value, line, key);
    } else if (key == "window") {
      c.window = to_int(value, line, key);
    } else if (key == "order_cap") {
      c.order_cap = to_int(value, line, key);
    } else if (key == "output") {
      c.output = value;
    } else if (key == "format") {
      c.format = value;
    } else {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  for (const auto& s : known_suites())
    if (std::find(chosen.begin(), chosen.end(), s) != chosen.end()) c.suites.push_back(s);
  validate(c);
  return c;
}

std::string SuiteConfig::render() const {
  std::ostringstream os;
  os << "suite";
  for (const auto& s : suites) os << ' ' << s;
  os << "\nq " << q << "\np " << p << "\nn " << n << "\nprec " << prec << "\nwindow " << window << "\norder_cap " << order_cap
     << "\nformat " << format << '\n';
  if (!output.empty()) os << "output " << output << '\n';
  return os.str();
}

bool Report::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.status == "FAIL"; });
}

std::string Report::render(std::string_view format) const {
  std::ostringstream os;
  if (format == "text") {
    for (const auto& r : rows) os << r.id << " [" << r.anchor << "]: " << r.witness << ": " << r.status << '\n';
    return os.str();
  }
  os << "check_id\tanchor\tstatus\twitness\n";
  for (const auto& r : rows) os << r.id << '\t' << r.anchor << '\t' << r.status << '\t' << r.witness << '\n';
  return os.str();
}

namespace {

using CheckFn = std::function<std::pair<bool, std::string>()>;

CheckRow run_check(const std::string& id, const std::string& anchor, const CheckFn& fn) {
  CheckRow row{id, anchor, "FAIL", ""};
  try {
    auto [ok, witness] = fn();
    row.status = ok ? "PASS" : "FAIL";
    row.witness = witness;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kBudget) row.status = "skipped (budget)";
    row.witness = e.what();
  }
  return row;
}

std::shared_ptr<const JQuotient> quotient(const std::string& label, NodeSet j) {
  return std::make_shared<const JQuotient>(JQuotient::build(CartanDatum::from_label(label), std::move(j)));
}

void coxeter_checks(const SuiteConfig& c, std::vector<CheckRow>& out) {
  out.push_back(run_check("coxeter.quotient", "quotient of C2 by J={1} and of A1 is the infinite dihedral group", [&] {
    const auto m = quotient_coxeter_matrix(CartanDatum::from_label("C2"), {1}, c.order_cap);
    const auto a = quotient_coxeter_matrix(CartanDatum::from_label("A1"), {}, c.order_cap);
    const std::string want = "[[1,inf],[inf,1]]";
    return std::pair{m.to_string() == want && a.to_string() == want, "C2/{1}=" + m.to_string() + " A1=" + a.to_string()};
  }));
}

void alcove_checks(const SuiteConfig&, std::vector<CheckRow>& out) {
  out.push_back(run_check("alcove.lift", "stabilizer of p_J(d) is generated by the walls of the cell of d", [&] {
    const auto q = JQuotient::build(CartanDatum::from_label("A1"), {});
    int points = 0, good = 0;
    for (const auto& d : rational_grid(q.datum(), {}, 6)) {
      ++points;
      const auto st = torus_stabilizer(q, p_j(q, d), cell_of(d));
      good += st.lift && st.lift->ok;
    }
    return std::pair{points > 0 && good == points, "A1 grid den<=6: " + std::to_string(good) + "/" + std::to_string(points)};
  }));
}

void reps_checks(const SuiteConfig&, std::vector<CheckRow>& out) {
  out.push_back(run_check("reps.mackey", "induced modules over the grid are irreducible", [&] {
    const auto q = quotient("A1", {});
    int built = 0, unit = 0;
    for (const auto& d : rational_grid(q->datum(), {}, 6)) {
      const auto s = *cell_of(d);
      std::size_t n = 0;
      for (const auto& g : q->generators().generators) n += !contains(s, g.node);
      for (const auto& rho : {SubgroupRep::trivial(n), SubgroupRep::sign(n)}) {
        ++built;
        unit += build_irreducible(q, d, rho).mackey_norm() == 1;
      }
    }
    return std::pair{built > 0 && unit == built, "norm 1: " + std::to_string(unit) + "/" + std::to_string(built)};
  }));
  out.push_back(run_check("reps.costandard", "built-in A1 filtration accepted, swapped one rejected", [&] {
    const auto data = load_costandard(CoStandardTable::parse(builtin_a1_costandard_text()));
    std::string why = "accepted";
    bool rejected = false;
    try {
      load_costandard(CoStandardTable::parse(swapped_a1_costandard_text()));
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::kTableRejected;
      why = e.what();
    }
    return std::pair{rejected, "top level " + std::to_string(data.top_level) + "; swapped: " + why};
  }));
}

void springer_checks(const SuiteConfig&, std::vector<CheckRow>& out) {
  out.push_back(run_check("springer.table", "SL2 table: blocks, closure order, labels", [&] {
    const auto& t = springer_table("SL2");
    std::size_t pairs = 0;
    for (const auto& b : t.blocks()) pairs += b.pairs.size();
    const bool order = t.closure_less("1", "reg") && !t.closure_less("reg", "1");
    const auto a1 = CartanDatum::from_label("A1");
    const auto z = assemble_z_label(a1, LevelOnePoint::real(*a1, {Rational(1), Rational(0)}), "reg", "eps");
    return std::pair{t.blocks().size() == 2 && pairs == 3 && order,
                     std::to_string(t.blocks().size()) + " blocks, " + std::to_string(pairs) + " pairs, cuspidal " + z.to_string()};
  }));
}

void fourier_checks(const SuiteConfig&, std::vector<CheckRow>& out) {
  out.push_back(run_check("fourier.pairing", "Z/2 pairing is the +-1/2 matrix; S3 pairing squares to 1", [&] {
    FourierData z2(curated_group("Z2"));
    const std::vector<std::string> order{"(0,1)", "(1,1)", "(0,chi1)", "(1,chi1)"};
    const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    bool z2ok = true;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        z2ok &= z2.matrix()(z2.index_of(order[a]), z2.index_of(order[b])) == Cyclotomic(Rational(sign[a][b], 2));
    FourierData s3(curated_group("S3"));
    const bool inv = s3.matrix() * s3.matrix() == Matrix<Cyclotomic>::identity(s3.matrix().rows());
    return std::pair{z2ok && inv, std::string("Z2 ") + (z2ok ? "exact" : "differs") + ", S3^2 " + (inv ? "= 1" : "!= 1")};
  }));
}

void pgl2_checks(const SuiteConfig& c, std::vector<CheckRow>& out) {
  const FieldPtr f = FiniteField::make(c.q);
  const std::string qs = "q=" + std::to_string(c.q);
  out.push_back(run_check("pgl2.discriminant", "v((l-l')^2) = 1 on random I2 elements", [&] {
    std::mt19937_64 rng(12345);
    int good = 0;
    std::string first_bad;
    for (int k = 0; k < 100; ++k) {
      const auto g = random_i2(f, rng, c.prec);
      std::string seen;
      try {
        const auto v = discriminant_valuation_raw(g);
        if (v && *v == 1) {
          ++good;
          continue;
        }
        seen = v ? std::to_string(*v) : std::string("inf");
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kIndeterminate) throw;
        seen = "undecided";
      }
      if (first_bad.empty()) first_bad = " first v=" + seen + " at " + g.to_string();
    }
    return std::pair{good == 100, qs + " prec=" + std::to_string(c.prec) + ": " + std::to_string(good) + "/100" + first_bad};
  }));
  out.push_back(run_check("pgl2.fixed_points", "an I2 element normalises exactly two Iwahori cosets", [&] {
    const auto g = LaurentMatrix::parse(f, "0,1;e,0");
    const auto r = fixed_point_count(g);
    std::mt19937_64 rng(777);
    int good = 0;
    for (int k = 0; k < 20; ++k) {
      const auto h = random_i1(f, rng, c.prec - 1);
      good += fixed_point_count(inverse_unit_det(h) * g * h).count == 2;
    }
    // count last so the text row reads "...count=2: PASS"
    return std::pair{r.count == 2 && good == 20, "conjugates=" + std::to_string(good) + "/20 bound=" + std::to_string(r.bound) +
                                                     " count=" + std::to_string(r.count)};
  }));
  out.push_back(run_check("pgl2.conjugator", "conjugators between I2 elements lie in I1", [&] {
    std::mt19937_64 rng(4242);
    int good = 0;
    for (int k = 0; k < 20; ++k) {
      const auto x = random_i2(f, rng, c.prec);
      const auto r = random_i1(f, rng, c.prec - 1);
      const auto h = conjugating_element(x, inverse_unit_det(r) * x * r);
      good += h && iwahori_class(*h) == IwahoriClass::kI1;
    }
    return std::pair{good == 20, std::to_string(good) + "/20"};
  }));
  out.push_back(run_check("pgl2.recurrence", "solutions of u(n+1) = -2u(n) - u(n-1) form a plane", [&] {
    const auto s = recurrence_solution_space(c.window);
    return std::pair{s.dim == 2 && s.closed_form, "dim=" + std::to_string(s.dim) + (s.closed_form ? " basis (-1)^n, (-1)^n n" : "")};
  }));
  out.push_back(run_check("pgl2.almost_char", "almost-character value 2q with Steinberg part 2q-1", [&] {
    const auto a = almost_char_value(c.q);
    return std::pair{a.value == 2 * c.q && a.unit == 1,
                     "value=" + std::to_string(a.value) + " steinberg=" + std::to_string(a.steinberg) + " unit=" + std::to_string(a.unit)};
  }));
  out.push_back(run_check("pgl2.a_space", "Hom spaces in the recurrence model: only degree 2, dimension 2", [&] {
    const auto d = a_space_dims("({1},C)", "recurrence", c.window);
    std::string w;
    for (auto [i, v] : d) w += (w.empty() ? "" : ",") + std::to_string(i) + "->" + std::to_string(v);
    return std::pair{d == std::map<int, std::size_t>{{2, 2}}, "{" + w + "}"};
  }));
  out.push_back(run_check("pgl2.coinvariants", "b0, b1 generate and coinvariants vanish", [&] {
    const auto r = module_generation_check(c.window);
    return std::pair{r.generated && r.coinvariant_rank == 0, "window=" + std::to_string(c.window) + " generated=" +
                                                                 (r.generated ? "yes" : "no") + " rank=" + std::to_string(r.coinvariant_rank)};
  }));
}

void witt_checks(const SuiteConfig& c, std::vector<CheckRow>& out) {
  out.push_back(run_check("witt.oracle", "W_2(F_p) is Z/p^2", [&] {
    const auto r = witt_oracle_sweep(c.p, 2);
    return std::pair{r.ok(), "p=" + std::to_string(c.p) + " pairs=" + std::to_string(r.pairs) + " mismatches=" + std::to_string(r.mismatches)};
  }));
  out.push_back(run_check("witt.lattices", "self-dual Lie lattices match their images in V_n", [&] {
    const auto g = LieLatticeDatum::sl2(c.p);
    const auto x = enumerate_X_n(g, c.n, true, 2'000'000);
    return std::pair{x.bijection_e && x.bijection_x && x.duality,
                     "p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + " lattices=" + std::to_string(x.candidates) +
                         " E=" + std::to_string(x.self_dual.size()) + " X=" + std::to_string(x.direct.size()) +
                         " E'0=" + std::to_string(x.e_prime0.size())};
  }));
  out.push_back(run_check("witt.borel", "L0/pL0 has q+1 Borel subalgebras", [&] {
    const auto g = LieLatticeDatum::sl2(c.p);
    const LatticeSubmodule l0(c.p, 0, 3, {});
    const int b = borel_fiber_count(g, 0, l0, c.p);
    return std::pair{b == c.p + 1, "q=" + std::to_string(c.p) + " borels=" + std::to_string(b)};
  }));
}

}  // namespace

Report run_suite(const SuiteConfig& config) {
  validate(config);
  Report rep;
  for (const auto& s : config.suites) {
    if (s == "coxeter") coxeter_checks(config, rep.rows);
    else if (s == "alcove") alcove_checks(config, rep.rows);
    else if (s == "reps") reps_checks(config, rep.rows);
    else if (s == "springer") springer_checks(config, rep.rows);
    else if (s == "fourier") fourier_checks(config, rep.rows);
    else if (s == "pgl2") pgl2_checks(config, rep.rows);
    else if (s == "witt") witt_checks(config, rep.rows);
  }
  return rep;
}

}  // namespace uac
