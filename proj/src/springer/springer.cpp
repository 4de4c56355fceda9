#include "uac/springer/springer.hpp"

#include <map>
#include <set>
#include <sstream>

#include "uac/core/error.hpp"

namespace uac {

namespace {

constexpr std::string_view kBuiltin = R"(# generalized Springer data for the groups reached from type A1
# class NAME DIM | system NAME | closure LOWER UPPER | alias NAME CLASS
# block NAME J=<nodes> cuspidal=CLASS/SYSTEM central=+1|-1 relgroup=NAME
# pair CLASS SYSTEM IRREP   (belongs to the last block)

group SL2
class 1 0
class reg 2
closure 1 reg
system triv
system eps
block principal J={} cuspidal=1/triv central=+1 relgroup=A1
pair reg triv triv
pair 1 triv sign
block cuspidal J={1} cuspidal=reg/eps central=-1 relgroup=1
pair reg eps triv

group T
class 1 0
alias reg 1
system triv
block principal J={} cuspidal=1/triv central=+1 relgroup=1
pair 1 triv triv
)";

[[noreturn]] void bad(int line, const std::string& msg) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + msg);
}

NodeSet parse_nodes(const std::string& s, int line) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') bad(line, "expected {..} node set");
  NodeSet out;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return normalize(out);
}

std::string value_of(const std::string& tok, const std::string& key, int line) {
  if (tok.rfind(key + "=", 0) != 0) bad(line, "expected " + key + "=...");
  return tok.substr(key.size() + 1);
}

}  // namespace

SpringerTable SpringerTable::parse(std::string_view text, std::string_view group) {
  SpringerTable t;
  t.group_ = std::string(group);
  std::istringstream in{std::string(text)};
  std::string line, current;
  bool found = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "group") {
      ls >> current;
      if (current == group) found = true;
      continue;
    }
    if (current != group) continue;
    if (key == "class") {
      UnipotentClassLabel c{t.group_, "", 0};
      if (!(ls >> c.name >> c.dim)) bad(lineno, "class needs NAME DIM");
      for (const auto& o : t.classes_)
        if (o.name == c.name) bad(lineno, "duplicate class " + c.name);
      t.classes_.push_back(c);
    } else if (key == "alias") {
      std::string a, c;
      if (!(ls >> a >> c)) bad(lineno, "alias needs NAME CLASS");
      t.aliases_.emplace_back(a, c);
    } else if (key == "system") {
      std::string s;
      ls >> s;
      t.systems_.push_back(s);
    } else if (key == "closure") {
      std::string a, b;
      if (!(ls >> a >> b)) bad(lineno, "closure needs two classes");
      t.closure_.emplace_back(a, b);
    } else if (key == "block") {
      SpringerBlock b;
      std::string jt, ct, zt, rt;
      if (!(ls >> b.name >> jt >> ct >> zt >> rt)) bad(lineno, "block needs 5 fields");
      b.cuspidal.j = parse_nodes(value_of(jt, "J", lineno), lineno);
      auto cs = value_of(ct, "cuspidal", lineno);
      auto slash = cs.find('/');
      if (slash == std::string::npos) bad(lineno, "cuspidal=CLASS/SYSTEM");
      b.cuspidal.cls = cs.substr(0, slash);
      b.cuspidal.system = cs.substr(slash + 1);
      auto z = value_of(zt, "central", lineno);
      if (z != "+1" && z != "-1" && z != "1") bad(lineno, "central must be +1 or -1");
      b.central = z == "-1" ? -1 : 1;
      b.relgroup = value_of(rt, "relgroup", lineno);
      t.blocks_.push_back(std::move(b));
    } else if (key == "pair") {
      if (t.blocks_.empty()) bad(lineno, "pair before any block");
      SpringerPair p;
      if (!(ls >> p.cls >> p.system >> p.irrep)) bad(lineno, "pair needs CLASS SYSTEM IRREP");
      t.blocks_.back().pairs.push_back(p);
    } else {
      bad(lineno, "unknown key '" + key + "'");
    }
  }
  if (!found) throw Error(ErrorKind::kNotCurated, "no Springer data for group '" + std::string(group) + "'");
  // each (class, system) in exactly one block; names resolve
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& b : t.blocks_)
    for (const auto& p : b.pairs) {
      t.find_class(p.cls);
      if (!seen.emplace(p.cls, p.system).second)
        throw Error(ErrorKind::kStructural, "pair (" + p.cls + "," + p.system + ") in two blocks");
    }
  for (const auto& [a, b] : t.closure_) {
    t.find_class(a);
    t.find_class(b);
  }
  return t;
}

const UnipotentClassLabel& SpringerTable::find_class(std::string_view name) const {
  std::string n(name);
  for (const auto& [a, c] : aliases_)
    if (a == n) n = c;
  for (const auto& c : classes_)
    if (c.name == n) return c;
  throw Error(ErrorKind::kNotCurated, "unknown class '" + std::string(name) + "' of " + group_);
}

const SpringerPair* SpringerTable::find(std::string_view cls, std::string_view system) const {
  const auto& c = find_class(cls);
  for (const auto& b : blocks_)
    for (const auto& p : b.pairs)
      if (p.cls == c.name && p.system == system) return &p;
  return nullptr;
}

const SpringerBlock& SpringerTable::block_of(std::string_view cls, std::string_view system) const {
  const auto& c = find_class(cls);
  for (const auto& b : blocks_)
    for (const auto& p : b.pairs)
      if (p.cls == c.name && p.system == system) return b;
  throw Error(ErrorKind::kNotCurated,
              "(" + std::string(cls) + "," + std::string(system) + ") is not in the " + group_ + " table");
}

bool SpringerTable::closure_leq(std::string_view c, std::string_view c2) const {
  const std::string a = find_class(c).name, b = find_class(c2).name;
  std::set<std::string> reach{a};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [lo, hi] : closure_)
      if (reach.count(find_class(lo).name) && reach.insert(find_class(hi).name).second) grew = true;
  }
  return reach.count(b) > 0;
}

std::optional<SpringerPair> SpringerTable::by_irrep(std::string_view block, std::string_view irrep) const {
  for (const auto& b : blocks_)
    if (b.name == block)
      for (const auto& p : b.pairs)
        if (p.irrep == irrep) return p;
  return std::nullopt;
}

std::string SpringerTable::render() const {
  std::ostringstream out;
  out << "group " << group_ << "\n";
  for (const auto& b : blocks_) {
    out << "block " << b.name << " J=" << to_string(b.cuspidal.j) << " cuspidal=" << b.cuspidal.cls << "/"
        << b.cuspidal.system << " central=" << (b.central > 0 ? "+1" : "-1") << " relgroup=" << b.relgroup << "\n";
    for (const auto& p : b.pairs) out << "  " << p.cls << "\t" << p.system << "\t" << p.irrep << "\n";
  }
  return out.str();
}

std::string_view builtin_springer_text() { return kBuiltin; }

const SpringerTable& springer_table(std::string_view group) {
  static const SpringerTable sl2 = SpringerTable::parse(kBuiltin, "SL2");
  static const SpringerTable torus = SpringerTable::parse(kBuiltin, "T");
  if (group == "SL2") return sl2;
  if (group == "T") return torus;
  throw Error(ErrorKind::kNotCurated, "no Springer data for group '" + std::string(group) + "'");
}

std::vector<std::string> curated_springer_groups() { return {"SL2", "T"}; }

std::string ZLabel::to_string() const {
  return "(" + semisimple.to_string() + ", S=" + uac::to_string(s) + ", " + cls.group + ":" + cls.name + ", " +
         system + ")";
}

std::string centralizer_group(const CartanDatum& datum, const NodeSet& s) {
  if (datum.label() != "A1") throw Error(ErrorKind::kNotCurated, "Springer data is curated for type A1 only");
  const auto check = complement(datum, normalize(s));
  return check.empty() ? "T" : "SL2";
}

ZLabel assemble_z_label(DatumPtr datum, const LevelOnePoint& d, std::string_view cls, std::string_view system) {
  auto s = cell_of(d);
  if (!s) throw Error(ErrorKind::kPrecondition, "d lies in no cell");
  const std::string tag = centralizer_group(*datum, *s);
  const auto& table = springer_table(tag);
  const auto& block = table.block_of(cls, system);
  auto q = JQuotient::build(datum, {});
  ZLabel z;
  z.semisimple = p_j(q, d);
  z.s = *s;
  z.cls = table.find_class(cls);
  z.system = std::string(system);
  z.central = block.central;
  // Z(p(d)) = G_S-check: the stabilizer must be the Weyl group of the centralizer
  auto st = torus_stabilizer(q, z.semisimple, *s);
  const std::size_t expect = tag == "SL2" ? 2 : 1;
  if (!st.lift || !st.lift->ok || st.elements.size() != expect)
    throw Error(ErrorKind::kInternalConsistency, "centralizer of " + z.semisimple.to_string() + " is not " + tag);
  return z;
}

DiagramAutomorphism omega_for_central(const CartanDatum& datum, int central) {
  auto om = omega_group(datum);
  if (om.size() != 2) throw Error(ErrorKind::kNotCurated, "iota is curated for |Omega| = 2");
  return central > 0 ? om[0] : om[1];
}

}  // namespace uac
