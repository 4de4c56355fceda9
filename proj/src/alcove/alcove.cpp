#include "uac/alcove/alcove.hpp"

#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "uac/core/error.hpp"

namespace uac {
namespace {

std::vector<Rational> flatten(const QMatrix& m) { return m.data(); }

QMatrix linear_from(const QMatrix& r, const std::vector<Rational>& z0, const std::vector<Rational>& marks,
                    std::vector<Rational>& t) {
  const std::size_t n = r.rows();
  t = r * z0;
  for (std::size_t i = 0; i < n; ++i) t[i] -= z0[i];
  QMatrix f = r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i, j) -= t[i] * marks[j];
  return f;
}

}  // namespace

bool is_positive(const GaussianRational& c) { return c.re > 0 || (c.re == 0 && c.im > 0); }

LevelOnePoint::LevelOnePoint(const CartanDatum& datum, std::vector<GaussianRational> coords)
    : coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != datum.size())
    throw Error(ErrorKind::kPrecondition, "point has wrong number of coordinates");
  GaussianRational level{0, 0};
  for (int i = 0; i < datum.size(); ++i) {
    level.re += datum.mark(i) * coords_[i].re;
    level.im += datum.mark(i) * coords_[i].im;
  }
  if (level.re != 1 || level.im != 0) throw Error(ErrorKind::kPrecondition, "point is not on the level-1 hyperplane");
}

LevelOnePoint LevelOnePoint::real(const CartanDatum& datum, const std::vector<Rational>& coords) {
  std::vector<GaussianRational> c;
  for (const auto& x : coords) c.push_back({x, 0});
  return LevelOnePoint(datum, std::move(c));
}

bool LevelOnePoint::is_real() const {
  for (const auto& c : coords_)
    if (c.im != 0) return false;
  return true;
}

std::vector<Rational> LevelOnePoint::real_parts() const {
  std::vector<Rational> out;
  for (const auto& c : coords_) out.push_back(c.re);
  return out;
}

std::string LevelOnePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += uac::to_string(coords_[i].re);
    if (coords_[i].im != 0) out += (coords_[i].im > 0 ? "+" : "") + uac::to_string(coords_[i].im) + "i";
  }
  return out + ")";
}

std::optional<NodeSet> cell_of(const LevelOnePoint& x) {
  NodeSet s;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    const auto& c = x.coords()[i];
    if (c.re == 0 && c.im == 0) continue;
    if (!is_positive(c)) return std::nullopt;
    s.push_back(static_cast<int>(i));
  }
  if (s.empty()) return std::nullopt;
  return s;
}

TorusPoint::TorusPoint(std::vector<Rational> values) : values_(std::move(values)) {
  for (auto& v : values_) v = frac(v);
}

long TorusPoint::order() const {
  BigInt d = common_denominator(values_);
  return to_int64(d);
}

std::string TorusPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += uac::to_string(values_[i]);
  }
  return out + "]";
}

QMatrix JQuotient::restrict(const WeylElement& w) const {
  const auto& m = w.dual_action();
  const std::size_t r = jcheck_.size();
  for (int jn : j_)
    for (int k : jcheck_)
      if (m(jn, k) != 0) throw Error(ErrorKind::kInternalConsistency, w.to_string() + " does not preserve z_J");
  QMatrix out(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) out(a, b) = Rational(static_cast<long>(m(jcheck_[a], jcheck_[b])));
  return out;
}

std::vector<Rational> JQuotient::apply(const WeylElement& w, const std::vector<Rational>& x) const {
  return restrict(w) * x;
}

JQuotient JQuotient::build(DatumPtr datum, NodeSet j, std::size_t budget) {
  JQuotient q;
  q.datum_ = datum;
  q.j_ = normalize(std::move(j));
  q.jcheck_ = complement(*datum, q.j_);
  if (q.jcheck_.empty()) throw Error(ErrorKind::kPrecondition, "J must be a proper subset");
  q.gens_ = min_coset_generators(datum, q.j_);
  if (!q.gens_.ok())
    throw Error(ErrorKind::kPrecondition, "J=" + to_string(q.j_) + " fails the minimal-coset generator check");
  const std::size_t r = q.jcheck_.size();
  std::vector<Rational> marks, z0(r, Rational(0));
  for (int k : q.jcheck_) marks.push_back(Rational(datum->mark(k)));
  z0[0] = Rational(1) / marks[0];

  struct Affine {
    QMatrix f;
    std::vector<Rational> t;
  };
  std::vector<Affine> gen_aff;
  for (const auto& g : q.gens_.generators) {
    Affine a;
    a.f = linear_from(q.restrict(g.element), z0, marks, a.t);
    gen_aff.push_back(std::move(a));
  }

  std::vector<Affine> reps{{QMatrix::identity(r), std::vector<Rational>(r, Rational(0))}};
  q.finite_.push_back(QMatrix::identity(r));
  q.index_.emplace(flatten(q.finite_[0]), 0);
  q.words_.push_back({});
  std::vector<std::vector<Rational>> schreier;
  std::deque<std::size_t> queue{0};
  std::vector<std::vector<std::size_t>> right_gen(1);
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    right_gen[a].resize(gen_aff.size());
    for (std::size_t g = 0; g < gen_aff.size(); ++g) {
      QMatrix f = reps[a].f * gen_aff[g].f;
      std::vector<Rational> t = reps[a].f * gen_aff[g].t;
      for (std::size_t i = 0; i < r; ++i) t[i] += reps[a].t[i];
      auto key = flatten(f);
      auto it = q.index_.find(key);
      if (it == q.index_.end()) {
        if (q.finite_.size() >= budget)
          throw Error(ErrorKind::kIncompleteLattice, "finite quotient exceeds budget");
        std::size_t idx = q.finite_.size();
        q.index_.emplace(std::move(key), idx);
        q.finite_.push_back(f);
        reps.push_back({f, t});
        auto w = q.words_[a];
        w.push_back(static_cast<int>(g));
        q.words_.push_back(std::move(w));
        right_gen.emplace_back();
        queue.push_back(idx);
        right_gen[a][g] = idx;
      } else {
        right_gen[a][g] = it->second;
        std::vector<Rational> s(r);
        bool nonzero = false;
        for (std::size_t i = 0; i < r; ++i) {
          s[i] = t[i] - reps[it->second].t[i];
          nonzero |= s[i] != 0;
        }
        if (nonzero) schreier.push_back(std::move(s));
      }
    }
  }

  // Z-basis of L' via Hermite form of the scaled generators.
  if (r >= 2) {
    std::vector<Rational> all;
    for (const auto& s : schreier) all.insert(all.end(), s.begin(), s.end());
    BigInt den = common_denominator(all);
    std::vector<std::vector<BigInt>> rows;
    for (const auto& s : schreier) {
      std::vector<BigInt> row;
      for (const auto& x : s) row.push_back(BigInt(x * den));
      rows.push_back(std::move(row));
    }
    auto h = hermite_rows(std::move(rows));
    if (h.size() != r - 1) {
      std::string partial;
      for (const auto& row : h) {
        partial += " (";
        for (std::size_t i = 0; i < row.size(); ++i) partial += (i ? "," : "") + row[i].get_str();
        partial += ")/" + den.get_str();
      }
      throw Error(ErrorKind::kIncompleteLattice,
                  "translation lattice has rank " + std::to_string(h.size()) + " < " + std::to_string(r - 1) + ":" + partial);
    }
    q.basis_ = QMatrix(r, h.size());
    for (std::size_t c = 0; c < h.size(); ++c)
      for (std::size_t i = 0; i < r; ++i) q.basis_(i, c) = Rational(h[c][i]) / den;
  } else {
    q.basis_ = QMatrix(r, 0);
  }
  // independent rows of the basis, used to solve for coordinates
  for (std::size_t i = 0; i < q.basis_.rows() && q.pivot_rows_.size() < q.basis_.cols(); ++i) {
    QMatrix cand(q.pivot_rows_.size() + 1, q.basis_.cols());
    for (std::size_t k = 0; k <= q.pivot_rows_.size(); ++k) {
      std::size_t row = k < q.pivot_rows_.size() ? q.pivot_rows_[k] : i;
      for (std::size_t c = 0; c < q.basis_.cols(); ++c) cand(k, c) = q.basis_(row, c);
    }
    if (uac::rank(cand) == q.pivot_rows_.size() + 1) q.pivot_rows_.push_back(i);
  }

  const std::size_t n = q.finite_.size();
  const std::size_t rk = q.basis_.cols();
  for (std::size_t a = 0; a < n; ++a) {
    ZMatrix bmat(rk, rk);
    for (std::size_t c = 0; c < rk; ++c) {
      auto img = q.finite_[a] * q.basis_.col(c);
      auto co = q.coordinates(img);
      for (std::size_t i = 0; i < rk; ++i) {
        if (co[i].get_den() != 1) throw Error(ErrorKind::kInternalConsistency, "L' is not stable");
        bmat(i, c) = to_int64(co[i].get_num());
      }
    }
    auto inv = uac::inverse(to_rational(bmat));
    if (!inv) throw Error(ErrorKind::kInternalConsistency, "non-invertible lattice action");
    ZMatrix dual(rk, rk);
    for (std::size_t i = 0; i < rk; ++i)
      for (std::size_t c = 0; c < rk; ++c) {
        const Rational& x = (*inv)(c, i);
        if (x.get_den() != 1) throw Error(ErrorKind::kInternalConsistency, "lattice action not unimodular");
        dual(i, c) = to_int64(x.get_num());
      }
    q.lattice_action_.push_back(std::move(bmat));
    q.dual_action_.push_back(std::move(dual));
  }
  q.table_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = a;
      for (int g : q.words_[b]) c = right_gen[c][g];
      q.table_[a][b] = c;
    }
  return q;
}

std::vector<Rational> JQuotient::coordinates(const std::vector<Rational>& x) const {
  const std::size_t rk = basis_.cols();
  QMatrix sub(rk, rk);
  std::vector<Rational> rhs(rk);
  for (std::size_t k = 0; k < rk; ++k) {
    for (std::size_t c = 0; c < rk; ++c) sub(k, c) = basis_(pivot_rows_[k], c);
    rhs[k] = x[pivot_rows_[k]];
  }
  auto sol = solve(sub, rhs);
  if (!sol) throw Error(ErrorKind::kInternalConsistency, "vector outside z_J");
  auto back = basis_ * *sol;
  if (back != x) throw Error(ErrorKind::kPrecondition, "vector is not in z_J");
  return *sol;
}

std::size_t JQuotient::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < finite_.size(); ++b)
    if (table_[a][b] == 0) return b;
  throw Error(ErrorKind::kInternalConsistency, "no inverse in finite quotient");
}

std::size_t JQuotient::finite_image(const WeylElement& w) const {
  const std::size_t r = jcheck_.size();
  std::vector<Rational> marks, z0(r, Rational(0)), t;
  for (int k : jcheck_) marks.push_back(Rational(datum_->mark(k)));
  z0[0] = Rational(1) / marks[0];
  auto it = index_.find(flatten(linear_from(restrict(w), z0, marks, t)));
  if (it == index_.end()) throw Error(ErrorKind::kPrecondition, w.to_string() + " is not in the group");
  return it->second;
}

TorusPoint JQuotient::act(std::size_t a, const TorusPoint& t) const {
  const auto& b = lattice_action_[a];
  std::vector<Rational> out(t.rank(), Rational(0));
  for (std::size_t i = 0; i < t.rank(); ++i)
    for (std::size_t k = 0; k < t.rank(); ++k) out[i] += Rational(static_cast<long>(b(i, k))) * t.values()[k];
  return TorusPoint(std::move(out));
}

std::vector<std::int64_t> JQuotient::act_dual(std::size_t a, const std::vector<std::int64_t>& y) const {
  return dual_action_[a] * y;
}

int default_k(const CartanDatum& datum, const NodeSet& j) {
  auto jc = complement(datum, normalize(j));
  if (jc.empty()) throw Error(ErrorKind::kPrecondition, "J must be proper");
  return jc.front();
}

TorusPoint p_j(const JQuotient& q, const LevelOnePoint& d, std::optional<int> k) {
  if (!d.is_real()) throw Error(ErrorKind::kUnsupportedRegime, "p_J needs rational real coordinates");
  auto s = cell_of(d);
  if (!s) throw Error(ErrorKind::kPrecondition, "d lies in no cell");
  for (int i : *s)
    if (contains(q.j(), i)) throw Error(ErrorKind::kPrecondition, "d is not in D_J");
  const int kk = k.value_or(default_k(q.datum(), q.j()));
  if (contains(q.j(), kk)) throw Error(ErrorKind::kPrecondition, "k_J must lie outside J");
  std::vector<Rational> x;
  for (int i : q.jcheck()) {
    Rational c = d.coords()[i].re;
    if (i == kk) c -= Rational(1, q.datum().mark(kk));
    x.push_back(c);
  }
  if (q.rank() == 0) return TorusPoint(std::vector<Rational>{});
  return TorusPoint(q.coordinates(x));
}

std::vector<WeylElement> coset_subgroup(const JQuotient& q, const NodeSet& nodes, std::size_t budget) {
  std::vector<WeylElement> gens;
  for (const auto& g : q.generators().generators)
    if (contains(nodes, g.node)) gens.push_back(g.element);
  std::unordered_set<WeylElement, WeylHash> seen;
  std::vector<WeylElement> out{WeylElement(q.datum_ptr())};
  seen.insert(out[0]);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      WeylElement x = out[i] * g;
      if (seen.insert(x).second) {
        if (out.size() >= budget) throw Error(ErrorKind::kBudget, "subgroup exceeds budget");
        out.push_back(x);
      }
    }
  return out;
}

StabilizerResult torus_stabilizer(const JQuotient& q, const TorusPoint& t, const std::optional<NodeSet>& s) {
  StabilizerResult res;
  for (std::size_t a = 0; a < q.finite_order(); ++a)
    if (q.act(a, t) == t) res.elements.push_back(a);
  if (s) {
    NodeSet nodes;
    for (int k : q.jcheck())
      if (!contains(*s, k)) nodes.push_back(k);
    auto sub = coset_subgroup(q, nodes);
    std::set<std::size_t> image;
    for (const auto& w : sub) image.insert(q.finite_image(w));
    LiftCheck lc;
    lc.subgroup_order = sub.size();
    lc.stabilizer_order = res.elements.size();
    const bool injective = image.size() == sub.size();
    const bool onto = std::set<std::size_t>(res.elements.begin(), res.elements.end()) == image;
    lc.ok = injective && onto;
    if (!injective) lc.detail = "restriction to z_J is not injective";
    else if (!onto) lc.detail = "image differs from the stabilizer";
    res.lift = lc;
  }
  return res;
}

std::vector<LevelOnePoint> rational_grid(const CartanDatum& datum, const NodeSet& j, int max_den) {
  const NodeSet jc = complement(datum, normalize(j));
  std::set<std::vector<Rational>> points;
  for (int den = 1; den <= max_den; ++den) {
    std::vector<int> a(jc.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
      if (pos + 1 == jc.size()) {
        if (left % datum.mark(jc[pos]) != 0) return;
        a[pos] = left / datum.mark(jc[pos]);
        std::vector<Rational> c(datum.size(), Rational(0));
        for (std::size_t i = 0; i < jc.size(); ++i) c[jc[i]] = Rational(a[i], den);
        for (auto& x : c) x.canonicalize();
        points.insert(std::move(c));
        return;
      }
      for (int v = 0; v * datum.mark(jc[pos]) <= left; ++v) {
        a[pos] = v;
        rec(pos + 1, left - v * datum.mark(jc[pos]));
      }
    };
    rec(0, den);
  }
  std::vector<LevelOnePoint> out;
  for (const auto& c : points) out.push_back(LevelOnePoint::real(datum, c));
  return out;
}

}  // namespace uac
