#include "uac/core/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "uac/core/error.hpp"

namespace uac {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
  const int n = size();
  if (n == 0) throw Error(ErrorKind::kParse, "empty group table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::kParse, "group table not square");
    std::vector<int> s = row;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
      if (s[i] != i) throw Error(ErrorKind::kParse, "group table row is not a permutation");
  }
  id_ = -1;
  for (int e = 0; e < n && id_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) id_ = e;
  }
  if (id_ < 0) throw Error(ErrorKind::kParse, "group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(ErrorKind::kParse, "group table is not associative");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == id_) inv_[a] = b;
  if (labels_.empty())
    for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  class_of_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) cls.push_back(conj(g, a));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (int x : cls) class_of_[x] = static_cast<int>(classes_.size());
    classes_.push_back(std::move(cls));
  }
}

int FiniteGroup::order(int a) const {
  int k = 1, x = a;
  while (x != id_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < size(); ++a) e = std::lcm(e, order(a));
  return e;
}

std::vector<int> FiniteGroup::centralizer(int x) const {
  std::vector<int> out;
  for (int g = 0; g < size(); ++g)
    if (commute(g, x)) out.push_back(g);
  return out;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (static_cast<int>(centralizer(z).size()) == size()) out.push_back(z);
  return out;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& elements, std::string name) const {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elements.size(), std::vector<int>(elements.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(labels_[elements[i]]);
    for (std::size_t j = 0; j < elements.size(); ++j) {
      auto it = pos.find(mul(elements[i], elements[j]));
      if (it == pos.end()) throw Error(ErrorKind::kPrecondition, "elements do not form a subgroup");
      t[i][j] = it->second;
    }
  }
  return FiniteGroup(std::move(name), std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup("Z/" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<std::vector<int>>& gens) {
  const std::size_t d = gens.empty() ? 0 : gens.front().size();
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {  // a after b
    std::vector<int> c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = a[b[i]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto x = compose(elems[i], g);
      if (index.emplace(x, static_cast<int>(elems.size())).second) elems.push_back(x);
    }
  std::sort(elems.begin(), elems.end());
  index.clear();
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::string l = "[";
    for (std::size_t k = 0; k < d; ++k) l += (k ? " " : "") + std::to_string(elems[i][k]);
    labels.push_back(l + "]");
    for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = index.at(compose(elems[i], elems[j]));
  }
  return FiniteGroup(std::move(name), std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {swap, cycle};
  } else {
    gens = {std::vector<int>(n, 0)};
    if (n == 1) gens[0][0] = 0;
  }
  if (n <= 1) return cyclic(1);
  return from_permutations("S" + std::to_string(n), gens);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.size(), nb = b.size();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  std::vector<std::string> labels;
  for (int x = 0; x < na * nb; ++x) {
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return FiniteGroup(a.name() + "x" + b.name(), std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, name = "G";
  std::vector<std::vector<int>> rows;
  std::map<int, std::string> labels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "group") {
      ls >> name;
    } else if (key == "row") {
      std::vector<int> row;
      int v;
      while (ls >> v) row.push_back(v);
      if (!ls.eof()) throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": bad row");
      rows.push_back(std::move(row));
    } else if (key == "label") {
      int i;
      std::string l;
      ls >> i >> l;
      labels[i] = l;
    } else {
      throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  std::vector<std::string> lv;
  if (!labels.empty())
    for (std::size_t i = 0; i < rows.size(); ++i) lv.push_back(labels.count(i) ? labels[i] : std::to_string(i));
  return FiniteGroup(name, std::move(rows), std::move(lv));
}

}  // namespace uac
