#include "uac/coxeter/omega.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "uac/core/error.hpp"

namespace uac {

DiagramAutomorphism DiagramAutomorphism::identity(int size) {
  std::vector<int> p(size);
  for (int i = 0; i < size; ++i) p[i] = i;
  return DiagramAutomorphism(std::move(p));
}

bool DiagramAutomorphism::is_identity() const { return fixed_points() == size(); }

int DiagramAutomorphism::fixed_points() const {
  int c = 0;
  for (int i = 0; i < size(); ++i) c += perm_[i] == i;
  return c;
}

int DiagramAutomorphism::order() const {
  DiagramAutomorphism p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  std::vector<int> inv(perm_.size());
  for (int i = 0; i < size(); ++i) inv[perm_[i]] = i;
  return DiagramAutomorphism(std::move(inv));
}

NodeSet DiagramAutomorphism::image(const NodeSet& s) const {
  NodeSet out;
  for (int i : s) out.push_back(perm_[i]);
  return normalize(std::move(out));
}

DiagramAutomorphism operator*(const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDatumMismatch, "automorphisms of different diagrams");
  std::vector<int> p(a.size());
  for (int i = 0; i < a.size(); ++i) p[i] = a.perm_[b.perm_[i]];
  return DiagramAutomorphism(std::move(p));
}

std::string DiagramAutomorphism::to_string() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(perm_[i]);
  }
  return out + "]";
}

std::vector<DiagramAutomorphism> omega_group(const CartanDatum& datum) {
  std::set<DiagramAutomorphism> group{DiagramAutomorphism::identity(datum.size())};
  std::vector<DiagramAutomorphism> gens;
  for (const auto& p : datum.omega_table()) gens.emplace_back(p);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<DiagramAutomorphism> cur(group.begin(), group.end());
    for (const auto& a : cur)
      for (const auto& g : gens) grew |= group.insert(a * g).second;
  }
  std::vector<DiagramAutomorphism> out;
  out.push_back(DiagramAutomorphism::identity(datum.size()));
  for (const auto& x : group)
    if (!x.is_identity()) out.push_back(x);
  return out;
}

std::vector<DiagramAutomorphism> omega_stabilizer(const CartanDatum& datum, const NodeSet& j) {
  NodeSet jj = normalize(j);
  std::vector<DiagramAutomorphism> out;
  for (const auto& x : omega_group(datum))
    if (x.image(jj) == jj) out.push_back(x);
  return out;
}

WeylElement conjugate(const DiagramAutomorphism& xi, const WeylElement& w) {
  // Ad(xi) on generators is s_i -> s_{xi(i)}; transport the word.
  auto word = w.reduced_word();
  for (int& i : word) i = xi(i);
  return WeylElement::from_word(w.datum_ptr(), word);
}

ExtendedWeylElement::ExtendedWeylElement(DiagramAutomorphism omega, WeylElement weyl)
    : omega_(std::move(omega)), weyl_(std::move(weyl)) {
  if (omega_.size() != weyl_.datum().size())
    throw Error(ErrorKind::kDatumMismatch, "omega part and Weyl part over different diagrams");
}

ExtendedWeylElement::ExtendedWeylElement(WeylElement weyl)
    : omega_(DiagramAutomorphism::identity(weyl.datum().size())), weyl_(std::move(weyl)) {}

ZMatrix ExtendedWeylElement::dual_action() const {
  const std::size_t n = static_cast<std::size_t>(omega_.size());
  ZMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(static_cast<std::size_t>(omega_(static_cast<int>(i))), i) = 1;
  return p * weyl_.dual_action();
}

ExtendedWeylElement ExtendedWeylElement::inverse() const {
  // (xi w)^{-1} = w^{-1} xi^{-1} = xi^{-1} Ad(xi)(w^{-1})
  return ExtendedWeylElement(omega_.inverse(), conjugate(omega_, weyl_.inverse()));
}

ExtendedWeylElement operator*(const ExtendedWeylElement& a, const ExtendedWeylElement& b) {
  require_same_datum(a.weyl_.datum(), b.weyl_.datum());
  return ExtendedWeylElement(a.omega_ * b.omega_, conjugate(b.omega_.inverse(), a.weyl_) * b.weyl_);
}

std::string ExtendedWeylElement::to_string() const {
  if (omega_.is_identity()) return weyl_.to_string();
  auto group = omega_group(weyl_.datum());
  auto it = std::find(group.begin(), group.end(), omega_);
  return "om" + std::to_string(it - group.begin()) + "|" + weyl_.to_string();
}

ExtendedWeylElement ExtendedWeylElement::parse(DatumPtr datum, std::string_view text) {
  std::string s(text);
  auto bar = s.find('|');
  if (bar == std::string::npos) return ExtendedWeylElement(WeylElement::parse(datum, s));
  if (s.rfind("om", 0) != 0) throw Error(ErrorKind::kParse, "bad extended element '" + s + "'");
  int idx = 0;
  try {
    idx = std::stoi(s.substr(2, bar - 2));
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParse, "bad omega label in '" + s + "'");
  }
  auto group = omega_group(*datum);
  if (idx < 0 || idx >= static_cast<int>(group.size()))
    throw Error(ErrorKind::kParse, "omega label out of range in '" + s + "'");
  return ExtendedWeylElement(group[idx], WeylElement::parse(datum, s.substr(bar + 1)));
}

std::optional<int> element_order(const ExtendedWeylElement& w, int cap) {
  const int k0 = w.omega_part().order();
  ExtendedWeylElement p = w;
  for (int i = 1; i < k0; ++i) p = p * w;
  auto inner = element_order(p.weyl_part(), cap);
  if (!inner) return std::nullopt;
  return k0 * *inner;
}

std::vector<NodeSet> omega_orbits(const DiagramAutomorphism& omega, const NodeSet& jcheck) {
  std::vector<NodeSet> orbits;
  std::vector<bool> used(omega.size(), false);
  for (int i : jcheck) {
    if (used[i]) continue;
    NodeSet orbit;
    int k = i;
    do {
      orbit.push_back(k);
      used[k] = true;
      k = omega(k);
    } while (k != i);
    orbits.push_back(normalize(orbit));
  }
  return orbits;
}

FixedGeneratorResult fixed_subgroup_generators(DatumPtr datum, const NodeSet& j, const DiagramAutomorphism& omega) {
  NodeSet jj = normalize(j);
  if (omega.image(jj) != jj)
    throw Error(ErrorKind::kPrecondition, "omega " + omega.to_string() + " does not stabilize J=" + to_string(jj));
  bool in_group = false;
  for (const auto& x : omega_group(*datum)) in_group |= x == omega;
  if (!in_group) throw Error(ErrorKind::kPrecondition, "omega " + omega.to_string() + " is not in Omega");
  const NodeSet jcheck = complement(*datum, jj);
  const WeylElement w0j = longest_element(datum, jj);
  FixedGeneratorResult res;
  for (const auto& orbit : omega_orbits(omega, jcheck)) {
    if (orbit.size() == jcheck.size()) continue;
    WeylElement ss = longest_element(datum, unite(jj, orbit)) * w0j;
    if (conjugate(omega, ss) == ss && in_minimal_coset_subgroup(ss, jj))
      res.generators.push_back({orbit, ss});
    else
      res.failed.push_back(orbit);
  }
  return res;
}

OmegaSplitting omega_splitting(DatumPtr datum, const NodeSet& j, const DiagramAutomorphism& omega) {
  auto gens = fixed_subgroup_generators(datum, j, omega);
  if (!gens.ok())
    throw Error(ErrorKind::kPrecondition, "fixed-point generators failed for J=" + to_string(normalize(j)));
  const auto stab = omega_stabilizer(*datum, j);
  const std::size_t r = gens.generators.size();

  std::map<std::vector<int>, std::vector<DiagramAutomorphism>> fibres;
  for (const auto& xi : stab) {
    std::vector<int> perm(r);
    for (std::size_t a = 0; a < r; ++a) {
      WeylElement img = conjugate(xi, gens.generators[a].element);
      std::size_t b = 0;
      while (b < r && !(gens.generators[b].element == img)) ++b;
      if (b == r)
        throw Error(ErrorKind::kStructural, "Omega_J does not permute the fixed-point generators");
      perm[a] = static_cast<int>(b);
    }
    fibres[perm].push_back(xi);
  }
  std::vector<int> id(r);
  for (std::size_t a = 0; a < r; ++a) id[a] = static_cast<int>(a);

  OmegaSplitting s;
  s.kernel = fibres.at(id);
  s.image.push_back(id);
  for (const auto& [perm, _] : fibres)
    if (perm != id) s.image.push_back(perm);

  const std::size_t k1 = s.kernel.size(), k2 = s.image.size();
  if (k1 == 1) {
    s.which = SplitCase::kKernelTrivial;
    s.iso.assign(1, {});
    for (const auto& perm : s.image) s.iso[0].push_back(fibres.at(perm).front());
  } else if (k2 == 1) {
    s.which = SplitCase::kImageTrivial;
    for (const auto& xi : s.kernel) s.iso.push_back({xi});
  } else if (k1 == 2 && k2 == 2 && stab.size() == 4) {
    s.which = SplitCase::kBothOrderTwo;
    std::vector<DiagramAutomorphism> candidates;
    for (const auto& xi : stab)
      if (!xi.is_identity() && xi.fixed_points() >= 2) candidates.push_back(xi);
    if (candidates.size() != 1)
      throw Error(ErrorKind::kStructural, "no unique element of Omega_J with two fixed points");
    const auto& gamma = candidates.front();
    if (std::find(s.kernel.begin(), s.kernel.end(), gamma) != s.kernel.end())
      throw Error(ErrorKind::kStructural, "distinguished element lies in the kernel");
    s.gamma = gamma;
    for (const auto& xi : s.kernel) s.iso.push_back({xi, xi * gamma});
  } else {
    throw Error(ErrorKind::kStructural, "splitting of Omega_J matches none of the three cases (kernel order " +
                                            std::to_string(k1) + ", image order " + std::to_string(k2) + ")");
  }
  return s;
}

}  // namespace uac
