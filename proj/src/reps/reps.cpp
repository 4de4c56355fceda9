#include "uac/reps/reps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "uac/core/error.hpp"
#include "uac/springer/springer.hpp"

namespace uac {

CMatrix to_cyclotomic(const QMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Cyclotomic(m(i, j));
  return out;
}

Cyclotomic trace(const CMatrix& m) {
  Cyclotomic t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

// ---------------------------------------------------------------- semidirect

SemidirectElement SemidirectGroup::identity() const { return {std::vector<std::int64_t>(q_->rank(), 0), 0}; }

SemidirectElement SemidirectGroup::lattice(std::size_t i) const {
  auto g = identity();
  if (i >= g.lattice.size()) throw Error(ErrorKind::kPrecondition, "lattice index out of range");
  g.lattice[i] = 1;
  return g;
}

SemidirectElement SemidirectGroup::finite(std::size_t a) const {
  auto g = identity();
  if (a >= q_->finite_order()) throw Error(ErrorKind::kPrecondition, "finite index out of range");
  g.finite = a;
  return g;
}

SemidirectElement SemidirectGroup::finite_generator(int node) const {
  for (const auto& g : q_->generators().generators)
    if (g.node == node) return finite(q_->finite_image(g.element));
  throw Error(ErrorKind::kPrecondition, "no generator ss_" + std::to_string(node));
}

SemidirectElement SemidirectGroup::multiply(const SemidirectElement& a, const SemidirectElement& b) const {
  auto x = q_->act_dual(a.finite, b.lattice);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += a.lattice[i];
  return {std::move(x), q_->multiply(a.finite, b.finite)};
}

SemidirectElement SemidirectGroup::inverse(const SemidirectElement& a) const {
  const std::size_t ai = q_->inverse(a.finite);
  auto x = q_->act_dual(ai, a.lattice);
  for (auto& v : x) v = -v;
  return {std::move(x), ai};
}

SemidirectElement SemidirectGroup::affine_a1_generator(int node) const {
  if (q_->datum().size() != 2 || !q_->j().empty() || q_->rank() != 1)
    throw Error(ErrorKind::kPrecondition, "affine A1 generators need the A1 datum with J empty");
  auto w = finite_generator(1);
  if (node == 1) return w;
  if (node == 0) return multiply(lattice(0), w);
  throw Error(ErrorKind::kPrecondition, "node must be 0 or 1");
}

SemidirectElement SemidirectGroup::affine_a1_word(std::string_view word) const {
  auto g = identity();
  if (word == "e" || word.empty()) return g;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 's' || i + 1 >= word.size()) throw Error(ErrorKind::kParse, "bad word '" + std::string(word) + "'");
    const char c = word[++i];
    if (c != '0' && c != '1' && c != '2') throw Error(ErrorKind::kParse, "bad letter in '" + std::string(word) + "'");
    g = multiply(g, affine_a1_generator(c == '1' ? 1 : 0));  // s2 is node 0
  }
  return g;
}

std::string SemidirectGroup::to_string(const SemidirectElement& g) const {
  std::string out = "(";
  for (std::size_t i = 0; i < g.lattice.size(); ++i) out += (i ? "," : "") + std::to_string(g.lattice[i]);
  out += ";";
  for (int k : q_->word(g.finite)) out += "s" + std::to_string(q_->generators().generators[k].node);
  if (q_->word(g.finite).empty()) out += "e";
  return out + ")";
}

// ---------------------------------------------------------------- induced modules

SubgroupRep SubgroupRep::trivial(std::size_t ngens) {
  return {1, std::vector<CMatrix>(ngens, CMatrix::identity(1))};
}

SubgroupRep SubgroupRep::sign(std::size_t ngens) {
  return {1, std::vector<CMatrix>(ngens, CMatrix(1, 1, Cyclotomic(-1)))};
}

Cyclotomic FiniteDimRep::chi(const std::vector<std::int64_t>& x, std::size_t a) const {
  const auto& q = group_.quotient();
  auto y = q.act_dual(q.inverse(a), x);
  Rational s(0);
  for (std::size_t i = 0; i < y.size(); ++i) s += Rational(static_cast<long>(y[i])) * t_.values()[i];
  s = frac(s);
  return Cyclotomic::zeta(s.get_den().get_si(), s.get_num().get_si());
}

CMatrix FiniteDimRep::lattice_image(const std::vector<std::int64_t>& x) const {
  CMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < coset_reps_.size(); ++i) {
    const Cyclotomic c = chi(x, coset_reps_[i]);
    for (std::size_t k = 0; k < rho_dim_; ++k) m(i * rho_dim_ + k, i * rho_dim_ + k) = c;
  }
  return m;
}

CMatrix FiniteDimRep::image(const SemidirectElement& g) const { return lattice_image(g.lattice) * finite_[g.finite]; }

Cyclotomic FiniteDimRep::character(const SemidirectElement& g) const { return trace(image(g)); }

void FiniteDimRep::verify_relations() const {
  const auto& q = group_.quotient();
  std::vector<std::size_t> gens;
  for (const auto& g : q.generators().generators) gens.push_back(q.finite_image(g.element));
  if (finite_[q.identity()] != CMatrix::identity(dim_))
    throw Error(ErrorKind::kInternalConsistency, "identity does not act trivially");
  for (std::size_t a = 0; a < q.finite_order(); ++a)
    for (std::size_t g : gens)
      if (finite_[a] * finite_[g] != finite_[q.multiply(a, g)])
        throw Error(ErrorKind::kInternalConsistency, "finite part is not a representation");
  for (std::size_t l = 0; l < q.rank(); ++l) {
    auto e = group_.lattice(l).lattice;
    const CMatrix le = lattice_image(e);
    for (std::size_t l2 = 0; l2 < q.rank(); ++l2) {
      const CMatrix lf = lattice_image(group_.lattice(l2).lattice);
      if (le * lf != lf * le) throw Error(ErrorKind::kInternalConsistency, "lattice images do not commute");
    }
    for (std::size_t g : gens)
      if (finite_[g] * le != lattice_image(q.act_dual(g, e)) * finite_[g])
        throw Error(ErrorKind::kInternalConsistency, "semidirect relation fails");
  }
}

Rational FiniteDimRep::mackey_norm() const {
  const auto& q = group_.quotient();
  const long m = t_.order();
  const std::size_t r = q.rank(), n = q.finite_order(), idx = coset_reps_.size();
  // diagonal block traces of the finite images
  std::vector<std::vector<Cyclotomic>> diag(n, std::vector<Cyclotomic>(idx));
  std::vector<std::vector<bool>> fixed(n, std::vector<bool>(idx, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < idx; ++i) {
      Cyclotomic s;
      bool any = false;
      for (std::size_t k = 0; k < rho_dim_; ++k)
        for (std::size_t k2 = 0; k2 < rho_dim_; ++k2)
          if (!finite_[a](i * rho_dim_ + k, i * rho_dim_ + k2).is_zero()) any = true;
      for (std::size_t k = 0; k < rho_dim_; ++k) s += finite_[a](i * rho_dim_ + k, i * rho_dim_ + k);
      diag[a][i] = s;
      fixed[a][i] = any;
    }
  Cyclotomic total;
  std::vector<std::int64_t> x(r, 0);
  std::size_t count = 0;
  for (;;) {
    for (std::size_t a = 0; a < n; ++a) {
      Cyclotomic c;
      for (std::size_t i = 0; i < idx; ++i)
        if (fixed[a][i]) c += chi(x, coset_reps_[i]) * diag[a][i];
      total += c * c.conj();
      ++count;
    }
    std::size_t p = 0;
    while (p < r && ++x[p] == m) x[p++] = 0;
    if (p == r) break;
  }
  return total.rational_value() / Rational(static_cast<long>(count));
}

FiniteDimRep build_irreducible(std::shared_ptr<const JQuotient> qp, const LevelOnePoint& d, const SubgroupRep& rho) {
  if (!d.is_real()) throw Error(ErrorKind::kUnsupportedRegime, "build_irreducible needs rational real d");
  const JQuotient& q = *qp;
  auto s = cell_of(d);
  if (!s) throw Error(ErrorKind::kPrecondition, "d lies in no cell");
  FiniteDimRep rep{SemidirectGroup(qp)};
  rep.t_ = p_j(q, d);
  // generators of the stabilizer: ss_k, k outside S and J
  std::vector<std::size_t> hgens;
  for (const auto& g : q.generators().generators)
    if (!contains(*s, g.node)) hgens.push_back(q.finite_image(g.element));
  if (rho.gens.size() != hgens.size())
    throw Error(ErrorKind::kPrecondition, "rho needs " + std::to_string(hgens.size()) + " generator matrices");
  for (const auto& m : rho.gens)
    if (m.rows() != rho.dim || m.cols() != rho.dim) throw Error(ErrorKind::kPrecondition, "rho matrix has wrong size");
  auto st = torus_stabilizer(q, rep.t_, *s);
  if (!st.lift->ok) throw Error(ErrorKind::kInternalConsistency, "stabilizer lift fails: " + st.lift->detail);

  std::map<std::size_t, CMatrix> rho_of{{q.identity(), CMatrix::identity(rho.dim)}};
  std::vector<std::size_t> order{q.identity()};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t g = 0; g < hgens.size(); ++g) {
      const std::size_t h = q.multiply(order[i], hgens[g]);
      CMatrix m = rho_of.at(order[i]) * rho.gens[g];
      auto [it, fresh] = rho_of.emplace(h, m);
      if (fresh)
        order.push_back(h);
      else if (it->second != m)
        throw Error(ErrorKind::kInternalConsistency, "rho does not respect the relations of the stabilizer");
    }

  const std::size_t n = q.finite_order();
  std::vector<int> coset(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    for (std::size_t h : order) coset[q.multiply(a, h)] = static_cast<int>(rep.coset_reps_.size());
    rep.coset_reps_.push_back(a);
  }
  rep.rho_dim_ = rho.dim;
  rep.dim_ = rep.coset_reps_.size() * rho.dim;
  rep.finite_.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    CMatrix m(rep.dim_, rep.dim_);
    for (std::size_t i = 0; i < rep.coset_reps_.size(); ++i) {
      const std::size_t b = q.multiply(a, rep.coset_reps_[i]);
      const std::size_t j = coset[b];
      const std::size_t h = q.multiply(q.inverse(rep.coset_reps_[j]), b);
      const CMatrix& r = rho_of.at(h);
      for (std::size_t k = 0; k < rho.dim; ++k)
        for (std::size_t k2 = 0; k2 < rho.dim; ++k2) m(j * rho.dim + k, i * rho.dim + k2) = r(k, k2);
    }
    rep.finite_.push_back(std::move(m));
  }
  rep.verify_relations();
  return rep;
}

// ---------------------------------------------------------------- co-standard tables

namespace {

constexpr std::string_view kA1Table = R"(# zeta = ({1}, C): basis x, x'
group affine-A1
springer SL2
top S={0} d=1,0 class=1 system=triv
dim 2
gen s1
-1 1
0 1
gen s2
-1 0
0 1
omega
1 -1/2
0 -1
layer 2
1 0
layer 0
1 0
0 1
)";

constexpr std::string_view kSwappedTable = R"(# unit representation as submodule: basis y, y'
group affine-A1
springer SL2
top S={0} d=1,0 class=1 system=triv
dim 2
gen s1
1 1
0 -1
gen s2
1 0
0 -1
layer 2
1 0
layer 0
1 0
0 1
)";

[[noreturn]] void reject(const std::string& where, const std::string& msg) {
  throw Error(ErrorKind::kTableRejected, where + ": " + msg);
}

bool is_row(const std::string& line) {
  std::istringstream ls(line);
  std::string tok;
  if (!(ls >> tok)) return false;
  const char c = tok[0];
  return (c >= '0' && c <= '9') || c == '-' || c == '+';
}

std::vector<Rational> parse_row(const std::string& line) {
  std::istringstream ls(line);
  std::vector<Rational> row;
  std::string tok;
  while (ls >> tok) row.push_back(parse_rational(tok));
  return row;
}

QMatrix rows_to_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::kParse, "row has " + std::to_string(rows[i].size()) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string render_matrix(const QMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + to_string(m(i, j));
    out += "\n";
  }
  return out;
}

// coordinates of the columns of img in the basis given by the rows of b
std::optional<QMatrix> coords_in(const QMatrix& b, const QMatrix& img) {
  const QMatrix bt = b.transpose();
  QMatrix out(b.rows(), img.cols());
  for (std::size_t c = 0; c < img.cols(); ++c) {
    auto x = solve(bt, img.col(c));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < b.rows(); ++i) out(i, c) = (*x)[i];
  }
  return out;
}

// action of m restricted to the row span of b (b has independent rows)
std::optional<QMatrix> restrict_to(const QMatrix& m, const QMatrix& b) { return coords_in(b, m * b.transpose()); }

// action of m on span(big)/span(small)
QMatrix quotient_action(const QMatrix& m, const QMatrix& big, const QMatrix& small) {
  std::vector<std::vector<Rational>> basis;
  for (std::size_t i = 0; i < small.rows(); ++i) basis.push_back(small.row(i));
  const std::size_t ks = basis.size();
  for (std::size_t i = 0; i < big.rows(); ++i) {
    auto cand = basis;
    cand.push_back(big.row(i));
    if (rank(rows_to_matrix(cand, big.cols())) == cand.size()) basis = std::move(cand);
  }
  const QMatrix b = rows_to_matrix(basis, big.cols());
  auto full = restrict_to(m, b);
  if (!full) throw Error(ErrorKind::kInternalConsistency, "layer is not invariant");
  const std::size_t kq = basis.size() - ks;
  QMatrix out(kq, kq);
  for (std::size_t i = 0; i < kq; ++i)
    for (std::size_t j = 0; j < kq; ++j) out(i, j) = (*full)(ks + i, ks + j);
  return out;
}

std::string layer_name(int level) { return "layer " + std::to_string(level); }

}  // namespace

std::string_view builtin_a1_costandard_text() { return kA1Table; }
std::string_view swapped_a1_costandard_text() { return kSwappedTable; }

const QMatrix& CoStandardTable::gen(std::string_view name) const {
  for (const auto& [n, m] : gens)
    if (n == name) return m;
  throw Error(ErrorKind::kTableRejected, "table: no generator " + std::string(name));
}

CoStandardTable CoStandardTable::parse(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
  }
  CoStandardTable t;
  auto take_rows = [&](std::size_t& i) {
    std::vector<std::vector<Rational>> rows;
    while (i + 1 < lines.size() && is_row(lines[i + 1])) rows.push_back(parse_row(lines[++i]));
    return rows;
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string key;
    ls >> key;
    if (key == "group") {
      ls >> t.group;
    } else if (key == "springer") {
      ls >> t.springer;
    } else if (key == "top") {
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::kParse, "top: expected key=value");
        const std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "S") {
          if (v.size() < 2 || v.front() != '{' || v.back() != '}') throw Error(ErrorKind::kParse, "top: S={..}");
          std::istringstream vs(v.substr(1, v.size() - 2));
          std::string n;
          while (std::getline(vs, n, ','))
            if (!n.empty()) t.top.s.push_back(std::stoi(n));
          t.top.s = normalize(t.top.s);
        } else if (k == "d") {
          std::istringstream vs(v);
          std::string n;
          while (std::getline(vs, n, ',')) t.top.d.push_back(parse_rational(n));
        } else if (k == "class") {
          t.top.cls = v;
        } else if (k == "system") {
          t.top.system = v;
        } else {
          throw Error(ErrorKind::kParse, "top: unknown key " + k);
        }
      }
    } else if (key == "dim") {
      ls >> t.dim;
    } else if (key == "gen") {
      std::string name;
      ls >> name;
      t.gens.emplace_back(name, rows_to_matrix(take_rows(i), t.dim));
    } else if (key == "omega") {
      t.omega = rows_to_matrix(take_rows(i), t.dim);
    } else if (key == "layer") {
      FiltrationLayer l;
      if (!(ls >> l.level)) throw Error(ErrorKind::kParse, "layer needs a level");
      l.span = rows_to_matrix(take_rows(i), t.dim);
      t.layers.push_back(std::move(l));
    } else {
      throw Error(ErrorKind::kParse, "unknown key '" + key + "'");
    }
  }
  if (t.dim == 0) throw Error(ErrorKind::kParse, "table needs dim");
  for (const auto& [n, m] : t.gens)
    if (m.rows() != t.dim) throw Error(ErrorKind::kParse, "generator " + n + " is not " + std::to_string(t.dim) + "x" + std::to_string(t.dim));
  if (t.omega && t.omega->rows() != t.dim) throw Error(ErrorKind::kParse, "omega matrix has wrong size");
  return t;
}

std::string CoStandardTable::render() const {
  std::ostringstream out;
  out << "group " << group << "\nspringer " << springer << "\ntop S=" << to_string(top.s) << " d=";
  for (std::size_t i = 0; i < top.d.size(); ++i) out << (i ? "," : "") << to_string(top.d[i]);
  out << " class=" << top.cls << " system=" << top.system << "\ndim " << dim << "\n";
  for (const auto& [n, m] : gens) out << "gen " << n << "\n" << render_matrix(m);
  if (omega) out << "omega\n" << render_matrix(*omega);
  for (const auto& l : layers) out << "layer " << l.level << "\n" << render_matrix(l.span);
  return out.str();
}

CoStandardData load_costandard(const CoStandardTable& table) {
  if (table.group != "affine-A1") reject("table", "group tag '" + table.group + "' is not curated");
  const std::size_t n = table.dim;
  const QMatrix& s1 = table.gen("s1");
  const QMatrix& s2 = table.gen("s2");
  const QMatrix id = QMatrix::identity(n);
  if (s1 * s1 != id || s2 * s2 != id) reject("table", "generators are not involutions");
  if (table.omega) {
    const QMatrix& x = *table.omega;
    if (x * x != id) reject("table", "omega matrix is not an involution");
    if (x * s1 != s2 * x) reject("table", "omega does not conjugate s1 to s2");
  }
  if (table.layers.empty()) reject("table", "no filtration");

  auto layers = table.layers;
  std::sort(layers.begin(), layers.end(), [](const auto& a, const auto& b) { return a.level < b.level; });
  for (std::size_t i = 0; i + 1 < layers.size(); ++i)
    if (layers[i].level == layers[i + 1].level) reject(layer_name(layers[i].level), "listed twice");
  if (layers.front().level != 0) reject("layer 0", "missing");
  for (auto& l : layers) {
    if (rank(l.span) == 0) reject(layer_name(l.level), "zero span");
    l.span = row_space(l.span);
  }
  if (layers.front().span.rows() != n) reject("layer 0", "does not span the module");
  for (std::size_t i = 1; i < layers.size(); ++i) {
    if (!row_span_contains(layers[i - 1].span, layers[i].span))
      reject(layer_name(layers[i].level), "not contained in " + layer_name(layers[i - 1].level));
    if (layers[i].span.rows() == layers[i - 1].span.rows())
      reject(layer_name(layers[i].level), "equals " + layer_name(layers[i - 1].level));
  }
  for (const auto& l : layers) {
    std::vector<std::pair<std::string, const QMatrix*>> ops{{"s1", &s1}, {"s2", &s2}};
    if (table.omega) ops.emplace_back("omega", &*table.omega);
    for (const auto& [name, m] : ops)
      if (!restrict_to(*m, l.span)) reject(layer_name(l.level), "not stable under " + name);
  }

  // top layer against E
  const auto& top = layers.back();
  auto datum = CartanDatum::from_label("A1");
  auto q = std::make_shared<const JQuotient>(JQuotient::build(datum, {}));
  const LevelOnePoint d = LevelOnePoint::real(*datum, table.top.d);
  if (cell_of(d) != table.top.s) reject(layer_name(top.level), "d is not in the cell S");
  const std::string tag = centralizer_group(*datum, table.top.s);
  if (tag != table.springer) reject("table", "Springer group " + table.springer + " but the centralizer is " + tag);
  const auto& springer = springer_table(tag);
  const SpringerPair* pair = springer.find(table.top.cls, table.top.system);
  if (!pair) reject(layer_name(top.level), "top label is not in the Springer table");
  const auto& block = springer.block_of(table.top.cls, table.top.system);
  if (!block.cuspidal.j.empty()) reject(layer_name(top.level), "only the principal block is curated");
  std::size_t ngens = 0;
  for (const auto& g : q->generators().generators)
    if (!contains(table.top.s, g.node)) ++ngens;
  SubgroupRep rho;
  if (pair->irrep == "triv")
    rho = SubgroupRep::trivial(ngens);
  else if (pair->irrep == "sign")
    rho = SubgroupRep::sign(ngens);
  else
    reject(layer_name(top.level), "irrep " + pair->irrep + " is not curated");
  const FiniteDimRep e = build_irreducible(q, d, rho);
  auto r1 = restrict_to(s1, top.span), r2 = restrict_to(s2, top.span);
  if (e.dim() != top.span.rows())
    reject(layer_name(top.level), "top layer has dimension " + std::to_string(top.span.rows()) + ", E has " + std::to_string(e.dim()));
  const SemidirectGroup& g = e.group();
  // compare characters on all words of length <= 6
  std::vector<std::pair<std::string, QMatrix>> words{{"", QMatrix::identity(top.span.rows())}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto [w, m] = words[i];
    Rational tr(0);
    for (std::size_t k = 0; k < m.rows(); ++k) tr += m(k, k);
    if (e.character(g.affine_a1_word(w.empty() ? "e" : w)) != Cyclotomic(tr))
      reject(layer_name(top.level), "top layer is not E (character differs at " + (w.empty() ? std::string("e") : w) + ")");
    if (w.size() < 12) {
      words.emplace_back(w + "s1", m * *r1);
      words.emplace_back(w + "s2", m * *r2);
    }
  }

  CoStandardData out;
  out.table = table;
  out.top_level = top.level;
  const QMatrix ell = s2 * s1;  // the lattice generator
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    const std::string where = layer_name(layers[i].level);
    const QMatrix qs1 = quotient_action(s1, layers[i].span, layers[i + 1].span);
    const QMatrix ql = quotient_action(ell, layers[i].span, layers[i + 1].span);
    if (ql != QMatrix::identity(ql.rows())) reject(where, "lattice acts nontrivially");
    const std::size_t k = qs1.rows();
    const std::size_t triv = k - rank(qs1 - QMatrix::identity(k));
    const std::size_t sgn = k - rank(qs1 + QMatrix::identity(k));
    if (triv + sgn != k) reject(where, "layer is not semisimple");
    for (auto [irrep, mult] : {std::pair<std::string, std::size_t>{"triv", triv}, {"sign", sgn}}) {
      if (mult == 0) continue;
      auto p = springer.by_irrep(block.name, irrep);
      if (!p) reject(where, "irrep " + irrep + " has no Springer label");
      if (!springer.closure_less(table.top.cls, p->cls))
        reject(where, "class " + p->cls + " is not strictly above " + table.top.cls + " in the closure order");
      out.lower.push_back({layers[i].level, irrep, mult, p->cls, p->system});
    }
  }
  return out;
}

Cyclotomic almost_char_cvr(const CoStandardData& data, const ExtendedWeylElement& w) {
  const auto& datum = w.weyl_part().datum();
  if (datum.size() != 2) throw Error(ErrorKind::kDatumMismatch, "co-standard data is for type A1");
  if (!element_order(w)) throw Error(ErrorKind::kPrecondition, w.to_string() + " has infinite order");
  const auto& t = data.table;
  QMatrix m = QMatrix::identity(t.dim);
  if (!w.omega_part().is_identity()) {
    if (!t.omega) throw Error(ErrorKind::kUnsupportedRegime, "table has no Omega action");
    m = *t.omega;
  }
  for (int i : w.weyl_part().reduced_word()) m = m * t.gen(i == 1 ? "s1" : "s2");
  Rational tr(0);
  for (std::size_t k = 0; k < m.rows(); ++k) tr += m(k, k);
  return Cyclotomic(tr);
}

Cyclotomic almost_char_cvr(std::string_view zeta, const ExtendedWeylElement& w) {
  if (zeta != "({1},C)") throw Error(ErrorKind::kUnsupportedRegime, "no co-standard data for zeta " + std::string(zeta));
  static const CoStandardData a1 = load_costandard(CoStandardTable::parse(kA1Table));
  return almost_char_cvr(a1, w);
}

// ---------------------------------------------------------------- Omega induction

CMatrix GeneratorRep::image(const ExtendedWeylElement& w) const {
  CMatrix m = CMatrix::identity(dim);
  if (!w.omega_part().is_identity()) {
    auto it = std::find(omega.begin(), omega.end(), w.omega_part());
    if (it == omega.end()) throw Error(ErrorKind::kPrecondition, "omega part not in the represented group");
    m = omega_images[it - omega.begin()];
  }
  for (int i : w.weyl_part().reduced_word()) m = m * nodes[i];
  return m;
}

void GeneratorRep::verify() const {
  const int n = datum->size();
  if (static_cast<int>(nodes.size()) != n) throw Error(ErrorKind::kInternalConsistency, "one matrix per node expected");
  const CMatrix id = CMatrix::identity(dim);
  for (int i = 0; i < n; ++i) {
    if (nodes[i] * nodes[i] != id) throw Error(ErrorKind::kInternalConsistency, "s_" + std::to_string(i) + " is not an involution");
    for (int j = i + 1; j < n; ++j) {
      const int m = datum->coxeter_order(i, j);
      if (m == 0) continue;
      CMatrix p = id, st = nodes[i] * nodes[j];
      for (int k = 0; k < m; ++k) p = p * st;
      if (p != id) throw Error(ErrorKind::kInternalConsistency, "braid relation fails at " + std::to_string(i) + "," + std::to_string(j));
    }
  }
  for (std::size_t a = 0; a < omega.size(); ++a) {
    for (int i = 0; i < n; ++i)
      if (omega_images[a] * nodes[i] != nodes[omega[a](i)] * omega_images[a])
        throw Error(ErrorKind::kInternalConsistency, "Omega image does not conjugate generators");
    for (std::size_t b = 0; b < omega.size(); ++b) {
      auto c = std::find(omega.begin(), omega.end(), omega[a] * omega[b]);
      if (c == omega.end()) throw Error(ErrorKind::kInternalConsistency, "Omega list not closed");
      if (omega_images[a] * omega_images[b] != omega_images[c - omega.begin()])
        throw Error(ErrorKind::kInternalConsistency, "Omega images are not multiplicative");
    }
  }
}

GeneratorRep omega_induce(const GeneratorRep& rep, const std::vector<DiagramAutomorphism>& omega_j) {
  const std::size_t k = omega_j.size(), d = rep.dim;
  GeneratorRep out;
  out.datum = rep.datum;
  out.dim = k * d;
  out.omega = omega_j;
  for (int i = 0; i < rep.datum->size(); ++i) {
    CMatrix m(out.dim, out.dim);
    for (std::size_t p = 0; p < k; ++p) {
      const CMatrix& b = rep.nodes[omega_j[p].inverse()(i)];
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(p * d + r, p * d + c) = b(r, c);
    }
    out.nodes.push_back(std::move(m));
  }
  for (const auto& eta : omega_j) {
    CMatrix m(out.dim, out.dim);
    for (std::size_t p = 0; p < k; ++p) {
      auto it = std::find(omega_j.begin(), omega_j.end(), eta * omega_j[p]);
      if (it == omega_j.end()) throw Error(ErrorKind::kPrecondition, "Omega_J list is not a group");
      const std::size_t p2 = it - omega_j.begin();
      for (std::size_t r = 0; r < d; ++r) m(p2 * d + r, p * d + r) = Cyclotomic(1);
    }
    out.omega_images.push_back(std::move(m));
  }
  out.verify();
  return out;
}

// ---------------------------------------------------------------- idempotents

IdempotentReport kernel_idempotent_check(DatumPtr datum, const NodeSet& j, const DiagramAutomorphism& omega) {
  // Finite model: the image of <Omega_J, ss_K> acting on V-dagger with entries mod 4.
  // Finite-order integer matrices congruent to 1 mod 4 are trivial, so only
  // translations are lost; the order count below detects any collapse.
  constexpr std::int64_t kMod = 4;
  IdempotentReport rep;
  const auto split = omega_splitting(datum, j, omega);
  const auto gens = fixed_subgroup_generators(datum, j, omega);
  const auto om = omega_stabilizer(*datum, normalize(j));
  rep.kernel_order = split.kernel.size();
  if (split.kernel.size() != 2) {
    rep.detail = "kernel has order " + std::to_string(split.kernel.size());
    return rep;
  }
  using Key = std::vector<std::int64_t>;
  auto reduce = [&](const ZMatrix& m) {
    Key k(m.data().begin(), m.data().end());
    for (auto& x : k) x = ((x % kMod) + kMod) % kMod;
    return k;
  };
  const std::size_t dim = static_cast<std::size_t>(datum->size());
  auto kmul = [&](const Key& a, const Key& b) {
    Key c(dim * dim, 0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t k = 0; k < dim; ++k) {
        if (a[r * dim + k] == 0) continue;
        for (std::size_t col = 0; col < dim; ++col) c[r * dim + col] += a[r * dim + k] * b[k * dim + col];
      }
    for (auto& x : c) x %= kMod;
    return c;
  };
  auto closure = [&](const std::vector<Key>& gs) {
    Key id = reduce(ZMatrix::identity(dim));
    std::vector<Key> elems{id};
    std::map<Key, std::size_t> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (const auto& g : gs) {
        Key x = kmul(elems[i], g);
        if (index.emplace(x, elems.size()).second) elems.push_back(std::move(x));
      }
    return std::make_pair(std::move(elems), std::move(index));
  };
  std::vector<Key> wgens, allgens;
  for (const auto& g : gens.generators) wgens.push_back(reduce(g.element.dual_action()));
  allgens = wgens;
  for (const auto& xi : om) allgens.push_back(reduce(ExtendedWeylElement(xi, WeylElement(datum)).dual_action()));
  const auto [hel, hidx] = closure(wgens);
  const auto [gel, gidx] = closure(allgens);
  rep.group_order = gel.size();
  if (gel.size() != hel.size() * om.size()) {
    rep.detail = "finite model collapses: |G| = " + std::to_string(gel.size()) + ", |H||Omega_J| = " +
                 std::to_string(hel.size() * om.size());
    return rep;
  }
  const auto& kap = split.kernel[0].is_identity() ? split.kernel[1] : split.kernel[0];
  const Key kappa = reduce(ExtendedWeylElement(kap, WeylElement(datum)).dual_action());
  const Key one = gel[0];
  if (hidx.count(kappa)) {
    rep.detail = "kernel element lies in the W' image";
    return rep;
  }
  using Alg = std::map<Key, Rational>;
  auto amul = [&](const Alg& u, const Alg& v) {
    Alg w;
    for (const auto& [x, cx] : u)
      for (const auto& [y, cy] : v) w[kmul(x, y)] += cx * cy;
    for (auto it = w.begin(); it != w.end();) it = it->second == 0 ? w.erase(it) : std::next(it);
    return w;
  };
  Alg ep{{one, Rational(1, 2)}, {kappa, Rational(1, 2)}}, em{{one, Rational(1, 2)}, {kappa, Rational(-1, 2)}};
  Alg sum = ep;
  for (const auto& [x, c] : em) sum[x] += c;
  for (auto it = sum.begin(); it != sum.end();) it = it->second == 0 ? sum.erase(it) : std::next(it);
  if (amul(ep, ep) != ep || amul(em, em) != em) rep.detail = "not idempotent";
  else if (!amul(ep, em).empty()) rep.detail = "not orthogonal";
  else if (sum != Alg{{one, Rational(1)}}) rep.detail = "idempotents do not sum to 1";
  if (!rep.detail.empty()) return rep;
  for (const auto& g : allgens) {
    Alg eg{{g, Rational(1)}};
    if (amul(ep, eg) != amul(eg, ep)) {
      rep.detail = "idempotent is not central";
      return rep;
    }
  }
  // e+ Q[G] has basis e+ g, one per <kappa>-orbit
  std::set<std::set<std::size_t>> orbits;
  for (std::size_t g = 0; g < gel.size(); ++g) orbits.insert({g, gidx.at(kmul(kappa, gel[g]))});
  rep.summand_dim = orbits.size();
  if (rep.summand_dim * 2 != rep.group_order) {
    rep.detail = "kappa does not act freely";
    return rep;
  }
  if (rep.summand_dim != split.image.size() * hel.size()) {
    rep.detail = "summand is not the group algebra of Omega_{J,2} W'";
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace uac
