#include "uac/coxeter/cartan.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "uac/core/error.hpp"

namespace uac {
namespace {

struct Builder {
  int n;
  std::vector<std::vector<int>> kac;  // kac[i][j] = alpha_j(h_i)
  explicit Builder(int rank) : n(rank), kac(rank + 1, std::vector<int>(rank + 1, 0)) {
    for (int i = 0; i <= n; ++i) kac[i][i] = 2;
  }
  void bond(int i, int j, int ij = -1, int ji = -1) {
    kac[i][j] = ij;
    kac[j][i] = ji;
  }
  std::vector<std::vector<int>> pairing() const {
    std::vector<std::vector<int>> p(n + 1, std::vector<int>(n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) p[i][j] = kac[j][i];
    return p;
  }
};

std::vector<int> perm_from_cycles(int size, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> p(size);
  for (int i = 0; i < size; ++i) p[i] = i;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  return p;
}

}  // namespace

CartanDatum::CartanDatum(std::string label, std::vector<std::vector<int>> pairing,
                         std::vector<int> marks, std::vector<std::vector<int>> omega)
    : label_(std::move(label)), pairing_(std::move(pairing)), marks_(std::move(marks)),
      omega_(std::move(omega)) {
  const int sz = static_cast<int>(marks_.size());
  if (sz < 2) throw Error(ErrorKind::kParse, "affine datum needs at least two nodes");
  if (static_cast<int>(pairing_.size()) != sz)
    throw Error(ErrorKind::kParse, "pairing matrix size does not match marks");
  for (const auto& row : pairing_)
    if (static_cast<int>(row.size()) != sz) throw Error(ErrorKind::kParse, "pairing matrix not square");
  if (marks_[0] != 1) throw Error(ErrorKind::kParse, "n_0 must be 1");
  for (int m : marks_)
    if (m <= 0) throw Error(ErrorKind::kParse, "marks must be positive");
  for (int i = 0; i < sz; ++i) {
    if (pairing_[i][i] != 2) throw Error(ErrorKind::kParse, "diagonal pairing must be 2");
    for (int j = 0; j < sz; ++j) {
      if (i == j) continue;
      if (pairing_[i][j] > 0) throw Error(ErrorKind::kParse, "off-diagonal pairing must be <= 0");
      if ((pairing_[i][j] == 0) != (pairing_[j][i] == 0))
        throw Error(ErrorKind::kParse, "pairing zero pattern not symmetric");
    }
  }
  for (int j = 0; j < sz; ++j) {
    long s = 0;
    for (int i = 0; i < sz; ++i) s += static_cast<long>(marks_[i]) * pairing_[i][j];
    if (s != 0)
      throw Error(ErrorKind::kParse, "sum_i n_i alpha_i is not zero on h_" + std::to_string(j));
  }
  std::vector<bool> seen(sz, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < sz; ++j)
      if (!seen[j] && pairing_[i][j] != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorKind::kParse, "node graph is not connected");
  for (const auto& p : omega_) {
    if (static_cast<int>(p.size()) != sz) throw Error(ErrorKind::kParse, "omega permutation has wrong size");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < sz; ++i)
      if (sorted[i] != i) throw Error(ErrorKind::kParse, "omega entry is not a permutation");
    for (int i = 0; i < sz; ++i) {
      if (marks_[p[i]] != marks_[i]) throw Error(ErrorKind::kParse, "omega does not preserve marks");
      for (int j = 0; j < sz; ++j)
        if (pairing_[p[i]][p[j]] != pairing_[i][j])
          throw Error(ErrorKind::kParse, "omega does not preserve the pairing");
    }
  }
}

int CartanDatum::coxeter_order(int i, int j) const {
  if (i == j) return 1;
  switch (pairing_[i][j] * pairing_[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

std::shared_ptr<const CartanDatum> CartanDatum::affine(char family, int n) {
  const std::string label = std::string(1, family) + std::to_string(n);
  auto bad = [&] { return Error(ErrorKind::kParse, "unsupported affine type " + label); };
  std::vector<int> marks;
  std::vector<std::vector<int>> omega;
  const int sz = n + 1;
  if (n < 1) throw bad();
  Builder b(n);
  switch (family) {
    case 'A': {
      if (n == 1) {
        b.bond(0, 1, -2, -2);
      } else {
        for (int i = 0; i <= n; ++i) b.bond(i, (i + 1) % sz);
      }
      marks.assign(sz, 1);
      for (int r = 1; r <= n; ++r) {
        std::vector<int> p(sz);
        for (int i = 0; i < sz; ++i) p[i] = (i + r) % sz;
        omega.push_back(p);
      }
      break;
    }
    case 'B': {
      if (n < 3) throw bad();
      b.bond(0, 2);
      for (int i = 1; i < n - 1; ++i) b.bond(i, i + 1);
      b.bond(n - 1, n, -1, -2);
      marks.assign(sz, 2);
      marks[0] = marks[1] = 1;
      omega.push_back(perm_from_cycles(sz, {{0, 1}}));
      break;
    }
    case 'C': {
      if (n < 2) throw bad();
      b.bond(0, 1, -1, -2);
      for (int i = 1; i < n - 1; ++i) b.bond(i, i + 1);
      b.bond(n - 1, n, -2, -1);
      marks.assign(sz, 2);
      marks[0] = marks[n] = 1;
      std::vector<int> p(sz);
      for (int i = 0; i < sz; ++i) p[i] = n - i;
      omega.push_back(p);
      break;
    }
    case 'D': {
      if (n < 4) throw bad();
      b.bond(0, 2);
      for (int i = 1; i < n - 1; ++i) b.bond(i, i + 1);
      b.bond(n - 2, n);
      marks.assign(sz, 2);
      marks[0] = marks[1] = marks[n - 1] = marks[n] = 1;
      auto flip = [&](std::vector<std::vector<int>> ends) {
        std::vector<int> p(sz);
        for (int i = 0; i < sz; ++i) p[i] = (i >= 2 && i <= n - 2) ? n - i : i;
        for (const auto& c : ends)
          for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
        return p;
      };
      if (n % 2 == 0) {
        omega.push_back(perm_from_cycles(sz, {{0, 1}, {n - 1, n}}));
        omega.push_back(flip({{0, n - 1}, {1, n}}));
        omega.push_back(flip({{0, n}, {1, n - 1}}));
      } else {
        omega.push_back(flip({{0, n, 1, n - 1}}));
      }
      break;
    }
    case 'E': {
      if (n == 6) {
        b.bond(1, 3); b.bond(3, 4); b.bond(4, 5); b.bond(5, 6); b.bond(2, 4); b.bond(0, 2);
        marks = {1, 1, 2, 2, 3, 2, 1};
        omega.push_back(perm_from_cycles(sz, {{0, 1, 6}, {2, 3, 5}}));
      } else if (n == 7) {
        b.bond(0, 1); b.bond(1, 3); b.bond(3, 4); b.bond(4, 5); b.bond(5, 6); b.bond(6, 7); b.bond(2, 4);
        marks = {1, 2, 2, 3, 4, 3, 2, 1};
        omega.push_back(perm_from_cycles(sz, {{0, 7}, {1, 6}, {3, 5}}));
      } else if (n == 8) {
        b.bond(1, 3); b.bond(3, 4); b.bond(4, 5); b.bond(5, 6); b.bond(6, 7); b.bond(7, 8); b.bond(2, 4);
        b.bond(0, 8);
        marks = {1, 2, 3, 4, 6, 5, 4, 3, 2};
      } else {
        throw bad();
      }
      break;
    }
    case 'F': {
      if (n != 4) throw bad();
      b.bond(0, 1); b.bond(1, 2); b.bond(2, 3, -1, -2); b.bond(3, 4);
      marks = {1, 2, 3, 4, 2};
      break;
    }
    case 'G': {
      if (n != 2) throw bad();
      b.bond(1, 2, -3, -1);
      b.bond(0, 2);
      marks = {1, 3, 2};
      break;
    }
    default:
      throw bad();
  }
  return std::make_shared<const CartanDatum>(label, b.pairing(), marks, omega);
}

std::shared_ptr<const CartanDatum> CartanDatum::from_label(std::string_view label) {
  std::string s(label);
  if (!s.empty() && s.back() == '~') s.pop_back();
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw Error(ErrorKind::kParse, "bad type label '" + s + "'");
  int n = 0;
  try {
    n = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParse, "bad type label '" + s + "'");
  }
  return affine(static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))), n);
}

std::shared_ptr<const CartanDatum> CartanDatum::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, label;
  std::vector<int> marks;
  std::vector<std::vector<int>> pairing, omega;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto ints = [&] {
      std::vector<int> v;
      std::string tok;
      while (ls >> tok) {
        try {
          std::size_t used = 0;
          v.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
        }
      }
      return v;
    };
    if (key == "type") {
      ls >> label;
    } else if (key == "marks") {
      marks = ints();
    } else if (key == "pairing") {
      pairing.push_back(ints());
    } else if (key == "omega") {
      omega.push_back(ints());
    } else {
      throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (label.empty()) throw Error(ErrorKind::kParse, "missing 'type' line");
  return std::make_shared<const CartanDatum>(label, pairing, marks, omega);
}

std::string CartanDatum::render() const {
  std::ostringstream out;
  out << "type " << label_ << "\nmarks";
  for (int m : marks_) out << ' ' << m;
  out << '\n';
  for (const auto& row : pairing_) {
    out << "pairing";
    for (int x : row) out << ' ' << x;
    out << '\n';
  }
  for (const auto& p : omega_) {
    out << "omega";
    for (int x : p) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

NodeSet normalize(NodeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

NodeSet complement(const CartanDatum& d, const NodeSet& j) {
  NodeSet out;
  for (int i = 0; i < d.size(); ++i)
    if (!contains(j, i)) out.push_back(i);
  return out;
}

bool contains(const NodeSet& s, int k) { return std::find(s.begin(), s.end(), k) != s.end(); }

NodeSet unite(const NodeSet& a, const NodeSet& b) {
  NodeSet u = a;
  u.insert(u.end(), b.begin(), b.end());
  return normalize(std::move(u));
}

std::string to_string(const NodeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace uac
