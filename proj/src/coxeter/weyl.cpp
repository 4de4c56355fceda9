#include "uac/coxeter/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "uac/core/error.hpp"

namespace uac {
namespace {

bool nonpositive_nonzero(const ZMatrix& m, std::size_t idx, bool by_row) {
  bool nonzero = false;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    std::int64_t x = by_row ? m(idx, k) : m(k, idx);
    if (x > 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

// dual <- D_i * dual, root <- R_i * root, where D_i = I - h_i e_i^T and R_i = D_i^T.
void left_multiply_generator(const CartanDatum& d, int i, ZMatrix& dual, ZMatrix& root) {
  const std::size_t n = dual.rows();
  std::vector<std::int64_t> rowi = dual.row(i);
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t h = d.pairing(static_cast<int>(k), i);
    if (h == 0) continue;
    for (std::size_t c = 0; c < n; ++c) dual(k, c) -= h * rowi[c];
  }
  std::vector<std::int64_t> newrow(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t coef = (static_cast<int>(k) == i ? 1 : 0) - d.pairing(static_cast<int>(k), i);
    if (coef == 0) continue;
    for (std::size_t c = 0; c < n; ++c) newrow[c] += coef * root(k, c);
  }
  for (std::size_t c = 0; c < n; ++c) root(i, c) = newrow[c];
}

bool is_identity_matrix(const ZMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

void require_same_datum(const CartanDatum& a, const CartanDatum& b) {
  if (&a != &b && !(a == b))
    throw Error(ErrorKind::kDatumMismatch, "elements over " + a.label() + " and " + b.label());
}

WeylElement::WeylElement(DatumPtr datum)
    : datum_(std::move(datum)),
      dual_(ZMatrix::identity(datum_->size())),
      root_(ZMatrix::identity(datum_->size())) {}

WeylElement::WeylElement(DatumPtr datum, ZMatrix dual, ZMatrix root)
    : datum_(std::move(datum)), dual_(std::move(dual)), root_(std::move(root)) {
  compute_length();
}

WeylElement WeylElement::generator(DatumPtr datum, int i) {
  if (i < 0 || i >= datum->size())
    throw Error(ErrorKind::kPrecondition, "no node " + std::to_string(i) + " in " + datum->label());
  ZMatrix dual = ZMatrix::identity(datum->size());
  ZMatrix root = ZMatrix::identity(datum->size());
  left_multiply_generator(*datum, i, dual, root);
  WeylElement w(std::move(datum));
  w.dual_ = std::move(dual);
  w.root_ = std::move(root);
  w.length_ = 1;
  return w;
}

WeylElement WeylElement::from_word(DatumPtr datum, const std::vector<int>& word) {
  ZMatrix dual = ZMatrix::identity(datum->size());
  ZMatrix root = ZMatrix::identity(datum->size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= datum->size())
      throw Error(ErrorKind::kPrecondition, "no node " + std::to_string(*it) + " in " + datum->label());
    left_multiply_generator(*datum, *it, dual, root);
  }
  return WeylElement(std::move(datum), std::move(dual), std::move(root));
}

WeylElement WeylElement::parse(DatumPtr datum, std::string_view text) {
  std::vector<int> word;
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '*' || c == '.'; }), s.end());
  if (s == "e" || s == "1" || s.empty()) return WeylElement(std::move(datum));
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 's') throw Error(ErrorKind::kParse, "bad word '" + std::string(text) + "'");
    std::size_t end = pos + 1;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos + 1) throw Error(ErrorKind::kParse, "bad word '" + std::string(text) + "'");
    word.push_back(std::stoi(s.substr(pos + 1, end - pos - 1)));
    pos = end;
  }
  return from_word(std::move(datum), word);
}

void WeylElement::compute_length() {
  ZMatrix dual = dual_;
  ZMatrix root = root_;
  int len = 0;
  const int n = datum_->size();
  while (!is_identity_matrix(dual)) {
    int i = 0;
    while (i < n && !nonpositive_nonzero(dual, i, true)) ++i;
    if (i == n) throw Error(ErrorKind::kInternalConsistency, "element without left descent");
    left_multiply_generator(*datum_, i, dual, root);
    ++len;
  }
  length_ = len;
}

std::vector<int> WeylElement::reduced_word() const {
  ZMatrix dual = dual_;
  ZMatrix root = root_;
  std::vector<int> word;
  const int n = datum_->size();
  while (!is_identity_matrix(dual)) {
    int i = 0;
    while (i < n && !nonpositive_nonzero(dual, i, true)) ++i;
    word.push_back(i);
    left_multiply_generator(*datum_, i, dual, root);
  }
  return word;
}

std::string WeylElement::to_string() const {
  auto w = reduced_word();
  if (w.empty()) return "e";
  std::string out;
  for (int i : w) out += "s" + std::to_string(i);
  return out;
}

std::vector<int> WeylElement::left_descents() const {
  std::vector<int> out;
  for (int i = 0; i < datum_->size(); ++i)
    if (nonpositive_nonzero(dual_, i, true)) out.push_back(i);
  return out;
}

std::vector<int> WeylElement::right_descents() const {
  std::vector<int> out;
  for (int i = 0; i < datum_->size(); ++i)
    if (has_right_descent(i)) out.push_back(i);
  return out;
}

bool WeylElement::has_right_descent(int i) const { return nonpositive_nonzero(root_, i, false); }

WeylElement WeylElement::inverse() const {
  WeylElement w(datum_);
  w.dual_ = root_.transpose();
  w.root_ = dual_.transpose();
  w.length_ = length_;
  return w;
}

std::vector<std::int64_t> WeylElement::translation() const {
  std::vector<std::int64_t> t = dual_.col(0);
  t[0] -= 1;
  return t;
}

ZMatrix WeylElement::finite_part() const {
  ZMatrix f = dual_;
  auto t = translation();
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) f(i, j) -= t[i] * datum_->mark(static_cast<int>(j));
  return f;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  require_same_datum(*a.datum_, *b.datum_);
  return WeylElement(a.datum_, a.dual_ * b.dual_, a.root_ * b.root_);
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  require_same_datum(*a.datum_, *b.datum_);
  return a.dual_ == b.dual_;
}

std::size_t WeylElement::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : dual_.data()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

std::optional<int> element_order(const WeylElement& w, int cap) {
  const ZMatrix f = w.finite_part();
  ZMatrix fk = f;
  int k = 1;
  while (!is_identity_matrix(fk)) {
    if (++k > cap)
      throw Error(ErrorKind::kUndecidedOrder,
                  "finite part of " + w.to_string() + " has no order <= " + std::to_string(cap));
    fk = fk * f;
  }
  WeylElement p = w;
  for (int m = 1; m <= k; ++m) {
    if (m > 1) p = p * w;
    if (p.is_identity()) return m;
  }
  return std::nullopt;  // w^k is a nonzero translation
}

bool in_parabolic(const WeylElement& w, const NodeSet& j) {
  WeylElement u = w;
  while (!u.is_identity()) {
    auto d = u.left_descents();
    for (int i : d)
      if (!contains(j, i)) return false;
    u = WeylElement::generator(w.datum_ptr(), d.front()) * u;
  }
  return true;
}

std::vector<WeylElement> parabolic_elements(DatumPtr datum, const NodeSet& j, std::size_t budget) {
  std::vector<WeylElement> gens;
  for (int i : j) gens.push_back(WeylElement::generator(datum, i));
  std::unordered_set<WeylElement, WeylHash> seen;
  std::vector<WeylElement> out;
  std::deque<std::size_t> queue;
  WeylElement e(datum);
  seen.insert(e);
  out.push_back(e);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      WeylElement nxt = out[idx] * g;
      if (seen.insert(nxt).second) {
        if (out.size() >= budget) throw Error(ErrorKind::kBudget, "parabolic subgroup larger than budget");
        out.push_back(nxt);
        queue.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

WeylElement longest_element(DatumPtr datum, const NodeSet& j) {
  NodeSet jj = normalize(j);
  if (static_cast<int>(jj.size()) >= datum->size())
    throw Error(ErrorKind::kInfiniteGroup, "W_J is infinite for J = all nodes");
  for (int i : jj)
    if (i < 0 || i >= datum->size()) throw Error(ErrorKind::kPrecondition, "node out of range");
  WeylElement w(datum);
  for (;;) {
    auto it = std::find_if(jj.begin(), jj.end(), [&](int i) { return !w.has_right_descent(i); });
    if (it == jj.end()) return w;
    w = w * WeylElement::generator(datum, *it);
  }
}

bool in_minimal_coset_subgroup(const WeylElement& w, const NodeSet& j) {
  for (int i : j)
    if (w.has_right_descent(i)) return false;
  WeylElement winv = w.inverse();
  for (int i : j)
    if (!in_parabolic(w * WeylElement::generator(w.datum_ptr(), i) * winv, j)) return false;
  return true;
}

CosetGeneratorResult min_coset_generators(DatumPtr datum, const NodeSet& j) {
  NodeSet jj = normalize(j);
  CosetGeneratorResult res;
  const WeylElement w0j = longest_element(datum, jj);
  for (int k : complement(*datum, jj)) {
    NodeSet jk = unite(jj, {k});
    if (static_cast<int>(jk.size()) == datum->size()) continue;
    WeylElement ss = longest_element(datum, jk) * w0j;
    if (in_minimal_coset_subgroup(ss, jj))
      res.generators.push_back({k, ss});
    else
      res.failed.push_back(k);
  }
  return res;
}

CoxeterMatrix quotient_coxeter_matrix(DatumPtr datum, const NodeSet& j, int order_cap) {
  auto gens = min_coset_generators(datum, j);
  if (!gens.ok())
    throw Error(ErrorKind::kPrecondition,
                "minimal-coset generator check failed for J=" + to_string(normalize(j)));
  CoxeterMatrix m;
  const std::size_t r = gens.generators.size();
  for (const auto& g : gens.generators) m.nodes.push_back(g.node);
  if (r < 2) {
    m.nodes.clear();
    return m;
  }
  m.orders.assign(r, std::vector<int>(r, 1));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      auto o = element_order(gens.generators[a].element * gens.generators[b].element, order_cap);
      m.orders[a][b] = m.orders[b][a] = o.value_or(0);
    }
  return m;
}

std::string CoxeterMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t a = 0; a < orders.size(); ++a) {
    out += a ? ",[" : "[";
    for (std::size_t b = 0; b < orders[a].size(); ++b) {
      if (b) out += ',';
      out += orders[a][b] == 0 ? "inf" : std::to_string(orders[a][b]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace uac
