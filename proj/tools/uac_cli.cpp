// uac: command-line front end for the library and the verification suites.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "uac/alcove/alcove.hpp"
#include "uac/cli/harness.hpp"
#include "uac/core/error.hpp"
#include "uac/coxeter/weyl.hpp"
#include "uac/fourier/fourier.hpp"
#include "uac/pgl2/pgl2.hpp"
#include "uac/reps/reps.hpp"
#include "uac/springer/springer.hpp"
#include "uac/witt/lattice.hpp"
#include "uac/witt/witt.hpp"

using namespace uac;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kUsage, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

NodeSet parse_nodes(const std::string& text) {
  NodeSet s;
  std::string t = text;
  for (char& c : t)
    if (c == ',' || c == '{' || c == '}') c = ' ';
  std::istringstream in(t);
  int k;
  while (in >> k) s.push_back(k);
  return normalize(s);
}

std::vector<Rational> parse_coords(const std::string& text) {
  std::vector<Rational> v;
  std::string t = text;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::string w;
  while (in >> w) v.push_back(parse_rational(w));
  return v;
}

std::string join_word(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "s" + std::to_string(i);
  return s;
}

int cmd_verify(const std::string& config_path, const std::string& format, const std::string& output) {
  SuiteConfig c = config_path.empty() ? default_config() : parse_config(slurp(config_path));
  if (!format.empty()) c.format = format;
  if (!output.empty()) c.output = output;
  for (const auto& w : c.warnings) std::cerr << "warning: " << w << '\n';
  const Report r = run_suite(c);
  const std::string text = r.render(c.format);
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output);
    if (!out) throw Error(ErrorKind::kUsage, "cannot write " + c.output);
    out << text;
  }
  return r.ok() ? 0 : 1;
}

int cmd_weyl(const std::string& label, const std::string& j, const std::string& element, int cap) {
  const auto d = CartanDatum::from_label(label);
  const NodeSet js = parse_nodes(j);
  std::cout << "datum\t" << d->label() << "\nJ\t" << to_string(js) << '\n';
  const auto m = quotient_coxeter_matrix(d, js, cap);
  std::cout << "quotient\t" << m.to_string() << '\n';
  if (!element.empty()) {
    const auto w = WeylElement::parse(d, element);
    std::cout << "reduced_word\t" << join_word(w.reduced_word()) << "\nlength\t" << w.length() << '\n';
  }
  return 0;
}

int cmd_cells(const std::string& label, const std::string& j, int den) {
  const auto q = JQuotient::build(CartanDatum::from_label(label), parse_nodes(j));
  std::cout << "d\tcell\tp_J(d)\tstabilizer\tlift\n";
  bool ok = true;
  for (const auto& d : rational_grid(q.datum(), q.j(), den)) {
    const auto s = cell_of(d);
    const auto t = p_j(q, d);
    const auto st = torus_stabilizer(q, t, s);
    const bool lift = st.lift && st.lift->ok;
    ok &= lift;
    std::cout << d.to_string() << '\t' << (s ? to_string(*s) : "-") << '\t' << t.to_string() << '\t' << st.elements.size()
              << '\t' << (lift ? "ok" : "FAIL") << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_reps(const std::string& label, const std::string& j, const std::string& point, int den, const std::string& costandard) {
  if (!costandard.empty()) {
    const auto data = load_costandard(CoStandardTable::parse(costandard == "builtin" ? std::string(builtin_a1_costandard_text())
                                                                                     : slurp(costandard)));
    std::cout << "accepted\ttop_level=" << data.top_level << '\n';
    for (const auto& p : data.lower)
      std::cout << "layer " << p.level << '\t' << p.irrep << " x" << p.multiplicity << '\t' << p.cls << ',' << p.system << '\n';
    return 0;
  }
  const auto q = std::make_shared<const JQuotient>(JQuotient::build(CartanDatum::from_label(label), parse_nodes(j)));
  std::vector<LevelOnePoint> points;
  if (!point.empty()) points.push_back(LevelOnePoint::real(q->datum(), parse_coords(point)));
  else points = rational_grid(q->datum(), q->j(), den);
  std::cout << "d\trho\tdim\tindex\tnorm\n";
  bool ok = true;
  for (const auto& d : points) {
    const auto s = cell_of(d);
    if (!s) throw Error(ErrorKind::kPrecondition, d.to_string() + " lies in no cell");
    std::size_t n = 0;
    for (const auto& g : q->generators().generators) n += !contains(*s, g.node);
    for (const auto& [name, rho] : {std::pair{"trivial", SubgroupRep::trivial(n)}, std::pair{"sign", SubgroupRep::sign(n)}}) {
      const auto r = build_irreducible(q, d, rho);
      const Rational norm = r.mackey_norm();
      ok &= norm == 1;
      std::cout << d.to_string() << '\t' << name << '\t' << r.dim() << '\t' << r.index() << '\t' << to_string(norm) << '\n';
    }
  }
  return ok ? 0 : 1;
}

int cmd_springer(const std::string& group, const std::string& cls, const std::string& system, const std::string& point) {
  const auto& t = springer_table(group);
  if (cls.empty()) {
    std::cout << t.render();
    return 0;
  }
  const auto a1 = CartanDatum::from_label("A1");
  const auto d = LevelOnePoint::real(*a1, parse_coords(point.empty() ? "1,0" : point));
  std::cout << assemble_z_label(a1, d, cls, system).to_string() << '\n';
  return 0;
}

int cmd_fourier(const std::string& group) {
  const FourierData f = group == "B2" ? FourierData(curated_group("Z2")) : FourierData(curated_group(group));
  const auto& m = group == "B2" ? b2_matrix() : f.matrix();
  std::vector<std::string> labels;
  if (group == "B2") labels = b2_labels();
  else
    for (const auto& p : f.pairs()) labels.push_back(p.label);
  std::cout << "pair";
  for (const auto& l : labels) std::cout << '\t' << l;
  std::cout << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << labels[i];
    for (std::size_t k = 0; k < m.cols(); ++k) std::cout << '\t' << m(i, k).to_string();
    std::cout << '\n';
  }
  return 0;
}

int cmd_pgl2(int q, int prec, const std::string& matrix, const std::string& other, const std::string& op, int bound) {
  const auto f = FiniteField::make(q);
  const int pr = prec > 0 ? prec : LaurentScalar::kExact;
  const auto g = LaurentMatrix::parse(f, matrix, pr);
  std::cout << "op\tq\tprec\tmatrix\tresult\n";
  std::cout << op << '\t' << q << '\t' << (prec > 0 ? std::to_string(prec) : std::string("exact")) << '\t' << g.to_string() << '\t';
  if (op == "class") {
    std::cout << to_string(iwahori_class(g)) << '\n';
  } else if (op == "disc") {
    const auto v = discriminant_valuation_raw(g);
    std::cout << (v ? std::to_string(*v) : std::string("inf")) << '\n';
    return v && *v == 1 ? 0 : 1;
  } else if (op == "fixed") {
    const auto r = fixed_point_count(g, bound);
    std::cout << "count=" << r.count << " bound=" << r.bound << " cosets=" << r.cosets << '\n';
  } else if (op == "conj") {
    if (other.empty()) throw Error(ErrorKind::kUsage, "conj needs --other");
    const auto h = conjugating_element(g, LaurentMatrix::parse(f, other, pr));
    std::cout << (h ? h->to_string() : std::string("none")) << '\n';
    return h ? 0 : 1;
  } else {
    throw Error(ErrorKind::kUsage, "unknown pgl2 op '" + op + "'");
  }
  return 0;
}

int cmd_witt(const std::string& op, int p, int n, int m, const std::string& algebra, const std::string& a, const std::string& b) {
  if (op == "enum") {
    if (algebra != "sl2") throw Error(ErrorKind::kNotCurated, "algebra '" + algebra + "'");
    const auto x = enumerate_X_n(LieLatticeDatum::sl2(p), n);
    std::cout << "p\tn\tcandidates\tE\tX\tE'\tE'0\tbijection_E\tbijection_X\tduality\n"
              << p << '\t' << n << '\t' << x.candidates << '\t' << x.self_dual.size() << '\t' << x.direct.size() << '\t'
              << x.e_prime.size() << '\t' << x.e_prime0.size() << '\t' << x.bijection_e << '\t' << x.bijection_x << '\t'
              << x.duality << '\n';
    for (const auto& l : x.direct) std::cout << "X\t" << l.to_string() << '\n';
    return x.bijection_e && x.bijection_x && x.duality ? 0 : 1;
  }
  if (op == "oracle") {
    const auto r = witt_oracle_sweep(p, m);
    std::cout << "p=" << p << " m=" << m << " pairs=" << r.pairs << " mismatches=" << r.mismatches << '\n';
    return r.ok() ? 0 : 1;
  }
  const auto ring = WittRing::make(p, m);
  const auto x = WittScalar::parse(ring, a);
  const auto y = WittScalar::parse(ring, b);
  WittScalar z = x;
  if (op == "add") z = x + y;
  else if (op == "mul") z = x * y;
  else if (op == "sub") z = x - y;
  else throw Error(ErrorKind::kUsage, "unknown witt op '" + op + "'");
  std::cout << z.to_string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uac: exact computations around affine Weyl groups, PGL2 and Witt lattices"};
  app.require_subcommand(1);

  std::string config, format, output;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--config", config, "config file (key value per line)");
  verify->add_option("--format", format, "tsv or text")->check(CLI::IsMember({"tsv", "text"}));
  verify->add_option("--output", output, "write the report here");

  std::string datum = "A1", j, element;
  int cap = 24, den = 6;
  auto* weyl = app.add_subcommand("weyl", "quotient Coxeter matrix and reduced words");
  weyl->add_option("--datum", datum, "affine type label, e.g. C2");
  weyl->add_option("--j", j, "node subset, e.g. 1 or 0,2");
  weyl->add_option("--element", element, "word such as s0s1s0");
  weyl->add_option("--cap", cap, "order cap");

  auto* cells = app.add_subcommand("cells", "rational grid with cells and torus stabilizers");
  cells->add_option("--datum", datum);
  cells->add_option("--j", j);
  cells->add_option("--den", den, "largest denominator");

  std::string point, costandard;
  auto* reps = app.add_subcommand("reps", "induced representations and co-standard tables");
  reps->add_option("--datum", datum);
  reps->add_option("--j", j);
  reps->add_option("--point", point, "coordinates, e.g. 1/2,1/2");
  reps->add_option("--den", den);
  reps->add_option("--costandard", costandard, "table file, or 'builtin'");

  std::string group = "SL2", cls, system;
  auto* springer = app.add_subcommand("springer", "generalized Springer table and labels");
  springer->add_option("--group", group);
  springer->add_option("--class", cls, "unipotent class; prints the label instead of the table");
  springer->add_option("--system", system, "local system");
  springer->add_option("--point", point, "level-one point for the label");

  std::string fgroup = "Z2";
  auto* fourier = app.add_subcommand("fourier", "nonabelian Fourier matrix");
  fourier->add_option("--group", fgroup, "Z2, S3, Z2xZ2, Z3, 1 or B2");

  int q = 3, prec = 0, bound = 8;
  std::string matrix = "0,1;e,0", other, op = "class";
  auto* pgl2 = app.add_subcommand("pgl2", "Iwahori computations over F_q((e))");
  pgl2->add_option("--q", q);
  pgl2->add_option("--prec", prec, "precision of the entries; 0 keeps them exact");
  pgl2->add_option("--matrix", matrix, "a,b;c,d in Laurent notation");
  pgl2->add_option("--other", other, "second matrix for conj");
  pgl2->add_option("--op", op)->check(CLI::IsMember({"class", "disc", "fixed", "conj"}));
  pgl2->add_option("--bound", bound, "largest word length for fixed");

  int p = 3, n = 1, m = 2;
  std::string algebra = "sl2", wa = "(0,0)", wb = "(0,0)", wop = "enum";
  auto* witt = app.add_subcommand("witt", "Witt vectors and self-dual Lie lattices");
  witt->add_option("op", wop, "enum | oracle | add | mul | sub");
  witt->add_option("--p", p);
  witt->add_option("--n", n);
  witt->add_option("--m", m, "Witt length");
  witt->add_option("--algebra", algebra);
  witt->add_option("--a", wa);
  witt->add_option("--b", wb);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify) return cmd_verify(config, format, output);
    if (*weyl) return cmd_weyl(datum, j, element, cap);
    if (*cells) return cmd_cells(datum, j, den);
    if (*reps) return cmd_reps(datum, j, point, den, costandard);
    if (*springer) return cmd_springer(group, cls, system, point);
    if (*fourier) return cmd_fourier(fgroup);
    if (*pgl2) return cmd_pgl2(q, prec, matrix, other, op, bound);
    if (*witt) return cmd_witt(wop, p, n, m, algebra, wa, wb);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kUsage || e.kind() == ErrorKind::kParse ? 2 : 3;
  }
  return 0;
}
