#include <algorithm>
#include <exception>

#include <omp.h>

#include "uac/core/error.hpp"
#include "uac/pgl2/pgl2.hpp"

namespace uac {

namespace {

enum class Tri { kFalse, kTrue, kUnknown };

Tri tri_and(std::initializer_list<Tri> xs) {
  bool unknown = false;
  for (Tri t : xs) {
    if (t == Tri::kFalse) return Tri::kFalse;
    unknown |= t == Tri::kUnknown;
  }
  return unknown ? Tri::kUnknown : Tri::kTrue;
}

// v(x) >= k
Tri val_ge(const LaurentScalar& x, int k) {
  if (x.exact_zero()) return Tri::kTrue;
  if (!x.zero_to_precision()) return *x.valuation() >= k ? Tri::kTrue : Tri::kFalse;
  return x.prec() >= k ? Tri::kTrue : Tri::kUnknown;
}

// v(x) == k
Tri val_eq(const LaurentScalar& x, int k) {
  if (x.exact_zero()) return Tri::kFalse;
  if (!x.zero_to_precision()) return *x.valuation() == k ? Tri::kTrue : Tri::kFalse;
  return x.prec() > k ? Tri::kFalse : Tri::kUnknown;
}

std::optional<int> known_val(const LaurentScalar& x) {
  if (x.zero_to_precision()) return std::nullopt;
  return x.valuation();
}

// [[u, w],[y, z]] with v(u) = v(z) = m, v(w) >= m, v(y) > m for some m;
// I2 is the same test on the rows swapped with m read off the top-right entry.
Tri shape_test(const LaurentScalar& eq0, int off0, const LaurentScalar& eq1, int off1, const LaurentScalar& ge0, int goff0,
               const LaurentScalar& ge1, int goff1) {
  std::optional<int> m;
  if (auto v = known_val(eq0)) m = *v - off0;
  else if (auto v1 = known_val(eq1)) m = *v1 - off1;
  if (!m) {
    if (eq0.exact_zero() || eq1.exact_zero()) return Tri::kFalse;
    return Tri::kUnknown;
  }
  return tri_and({val_eq(eq0, *m + off0), val_eq(eq1, *m + off1), val_ge(ge0, *m + goff0), val_ge(ge1, *m + goff1)});
}

Tri in_i1(const LaurentMatrix& g) { return shape_test(g.a, 0, g.d, 0, g.b, 0, g.c, 1); }
// [[c,d],[a,b]] with v(a) = v(d)+1 = m+1, v(b) >= m+1, v(c) >= m+1
Tri in_i2(const LaurentMatrix& g) { return shape_test(g.b, 0, g.c, 1, g.d, 1, g.a, 1); }

}  // namespace

IwahoriClass iwahori_class(const LaurentMatrix& m) {
  const LaurentScalar det = m.det();
  if (det.exact_zero()) throw Error(ErrorKind::kPrecondition, "singular matrix");
  if (det.zero_to_precision()) throw Error(ErrorKind::kIndeterminate, "determinant vanishes to precision");
  const Tri one = in_i1(m);
  if (one == Tri::kTrue) return IwahoriClass::kI1;
  const Tri two = in_i2(m);
  if (two == Tri::kTrue) return IwahoriClass::kI2;
  if (one == Tri::kFalse && two == Tri::kFalse) return IwahoriClass::kNeither;
  throw Error(ErrorKind::kIndeterminate, "Iwahori membership undecided at this precision: " + m.to_string());
}

std::optional<int> discriminant_valuation_raw(const LaurentMatrix& g) {
  if (iwahori_class(g) != IwahoriClass::kI2) throw Error(ErrorKind::kPrecondition, "discriminant needs an I2 element");
  const int m = *g.b.valuation();
  const LaurentMatrix n = g.shifted(-m);
  const LaurentScalar tr = n.trace();
  const LaurentScalar four = LaurentScalar::constant(g.a.field(), g.a.field()->from_int(4));
  return (tr * tr - four * n.det()).valuation();
}

int discriminant_valuation(const LaurentMatrix& g) {
  const auto v = discriminant_valuation_raw(g);
  if (!v || *v != 1)
    throw Error(ErrorKind::kInternalConsistency,
                "discriminant valuation " + (v ? std::to_string(*v) : std::string("inf")) + " != 1 for " + g.to_string());
  return 1;
}

std::optional<LaurentMatrix> conjugating_element(const LaurentMatrix& g, const LaurentMatrix& g2, int work_prec) {
  if (iwahori_class(g) != IwahoriClass::kI2 || iwahori_class(g2) != IwahoriClass::kI2)
    throw Error(ErrorKind::kPrecondition, "conjugating_element needs two I2 elements");
  const int m = *g.b.valuation(), m2 = *g2.b.valuation();
  if (m != m2) throw Error(ErrorKind::kPrecondition, "determinant valuations differ");
  const LaurentMatrix n = g.shifted(-m), n2 = g2.shifted(-m);
  if (!(n.trace() - n2.trace()).zero_to_precision() || !(n.det() - n2.det()).zero_to_precision()) return std::nullopt;
  // n = [[e c, d],[e a, e b]]
  const LaurentScalar a = n.c.shifted(-1), c = n.a.shifted(-1);
  const LaurentScalar a2 = n2.c.shifted(-1), c2 = n2.a.shifted(-1);
  const LaurentScalar a2inv = a2.inverse(work_prec);
  const FieldPtr& f = g.a.field();
  // inverse of r = [[1,(c2-c)/a],[0,a2/a]], which satisfies r n = n2 r
  LaurentMatrix h{LaurentScalar::constant(f, 1), -((c2 - c) * a2inv), LaurentScalar(f), a * a2inv};
  if (!LaurentMatrix::agree(n * h, h * n2))
    throw Error(ErrorKind::kInternalConsistency, "normal-form conjugator does not conjugate");
  if (iwahori_class(h) != IwahoriClass::kI1)
    throw Error(ErrorKind::kInternalConsistency, "conjugator outside I1: " + h.to_string());
  return h;
}

LaurentMatrix pgl2_generator(FieldPtr f, std::string_view name, int t) {
  using S = LaurentScalar;
  const S zero(f), one = S::constant(f, 1);
  if (name == "u1") return {one, S::constant(f, t), zero, one};
  if (name == "u0") return {one, zero, S::monomial(f, t, 1), one};
  if (name == "s1") return {zero, one, one, zero};
  if (name == "s0") return {zero, S::monomial(f, 1, -1), S::monomial(f, 1, 1), zero};
  if (name == "omega") return {zero, one, S::monomial(f, 1, 1), zero};
  throw Error(ErrorKind::kPrecondition, "unknown generator " + std::string(name));
}

namespace {

struct Node {
  LaurentMatrix x;
  int len;
  int last;  // -1 at the root, else the last letter (0 or 1)
};

class CosetWalker {
 public:
  CosetWalker(const LaurentMatrix& g, int bound)
      : g_(g), bound_(bound), omega_(pgl2_generator(g.a.field(), "omega")), omega_adj_(omega_.adjugate()) {
    const FieldPtr& f = g.a.field();
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t < f->q(); ++t)
        step_[i].push_back(pgl2_generator(f, i ? "u1" : "u0", t) * pgl2_generator(f, i ? "s1" : "s0"));
  }

  // hits at this node (x and x omega)
  int visit(const Node& n) const {
    const LaurentMatrix y = n.x.adjugate() * g_ * n.x;
    int hits = iwahori_class(y) == IwahoriClass::kI2;
    hits += iwahori_class(omega_adj_ * y * omega_) == IwahoriClass::kI2;
    return hits;
  }

  std::vector<Node> children(const Node& n) const {
    std::vector<Node> out;
    if (n.len >= bound_) return out;
    for (int i = 0; i < 2; ++i) {
      if (i == n.last) continue;
      for (const LaurentMatrix& s : step_[i]) out.push_back({n.x * s, n.len + 1, i});
    }
    return out;
  }

  void dfs(const Node& n, std::vector<std::int64_t>& counts, std::int64_t& visited) const {
    counts[n.len] += visit(n);
    visited += 2;
    for (const Node& c : children(n)) dfs(c, counts, visited);
  }

 private:
  LaurentMatrix g_;
  int bound_;
  LaurentMatrix omega_, omega_adj_;
  std::vector<LaurentMatrix> step_[2];
};

}  // namespace

std::vector<std::int64_t> coset_hits(const LaurentMatrix& g, int bound, bool parallel, std::int64_t* visited) {
  if (bound < 0) throw Error(ErrorKind::kPrecondition, "negative word-length bound");
  const CosetWalker walker(g, bound);
  const Node root{LaurentMatrix::identity(g.a.field()), 0, -1};
  std::vector<std::int64_t> counts(bound + 1, 0);
  std::int64_t seen = 0;
  if (!parallel || bound < 2) {
    walker.dfs(root, counts, seen);
  } else {
    // depth 0 and 1 serially, then one task per depth-2 node
    counts[0] += walker.visit(root);
    seen += 2;
    std::vector<Node> frontier;
    for (const Node& c : walker.children(root)) {
      counts[1] += walker.visit(c);
      seen += 2;
      for (Node& cc : walker.children(c)) frontier.push_back(std::move(cc));
    }
    std::exception_ptr failure;
    const long nf = static_cast<long>(frontier.size());
#pragma omp parallel
    {
      std::vector<std::int64_t> local(bound + 1, 0);
      std::int64_t local_seen = 0;
#pragma omp for schedule(dynamic)
      for (long k = 0; k < nf; ++k) {
        try {
          walker.dfs(frontier[k], local, local_seen);
        } catch (...) {
#pragma omp critical(uac_coset_error)
          if (!failure) failure = std::current_exception();
        }
      }
#pragma omp critical(uac_coset_merge)
      {
        for (int l = 0; l <= bound; ++l) counts[l] += local[l];
        seen += local_seen;
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  if (visited) *visited = seen;
  return counts;
}

FixedPointReport fixed_point_count(const LaurentMatrix& g, int max_bound, bool parallel) {
  if (iwahori_class(g) != IwahoriClass::kI2) throw Error(ErrorKind::kPrecondition, "fixed_point_count needs an I2 element");
  if (max_bound < 2) throw Error(ErrorKind::kPrecondition, "word-length bound must be at least 2");
  std::int64_t last = -1;
  for (int bound = 2; bound <= max_bound; bound += 2) {
    FixedPointReport r;
    r.by_length = coset_hits(g, bound, parallel, &r.cosets);
    std::int64_t before = 0, total = 0;
    for (int l = 0; l <= bound; ++l) {
      total += r.by_length[l];
      if (l <= bound - 2) before += r.by_length[l];
    }
    last = total;
    if (before == total) {
      r.count = static_cast<int>(total);
      r.bound = bound;
      return r;
    }
  }
  throw Error(ErrorKind::kIndeterminate,
              "fixed-point count not stable by bound " + std::to_string(max_bound) + " (partial count " + std::to_string(last) + ")");
}

namespace {

LaurentScalar random_series(FieldPtr f, std::mt19937_64& rng, int val, int len, bool unit, int prec) {
  std::uniform_int_distribution<int> digit(0, f->q() - 1), nonzero(1, f->q() - 1);
  std::vector<int> c(std::max(len, 1));
  for (int& x : c) x = digit(rng);
  if (unit) c[0] = nonzero(rng);
  return LaurentScalar(f, val, std::move(c), prec);
}

}  // namespace

LaurentMatrix random_i1(FieldPtr f, std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> nonzero(1, f->q() - 1);
  const auto b = random_series(f, rng, 0, degree + 1, false, LaurentScalar::kExact);
  const auto c = random_series(f, rng, 1, degree + 1, false, LaurentScalar::kExact);
  const auto alpha = LaurentScalar::constant(f, nonzero(rng)), delta = LaurentScalar::constant(f, nonzero(rng));
  // u(b) diag(alpha, delta) l(c): determinant alpha delta
  return {alpha + b * delta * c, b * delta, delta * c, delta};
}

LaurentMatrix random_i2(FieldPtr f, std::mt19937_64& rng, int prec) {
  // [[e c, d],[e a, e b]] with a, d units
  const auto c = random_series(f, rng, 1, prec, false, prec);
  const auto d = random_series(f, rng, 0, prec, true, prec);
  const auto a = random_series(f, rng, 1, prec, true, prec);
  const auto b = random_series(f, rng, 1, prec, false, prec);
  return {c, d, a, b};
}

LaurentMatrix inverse_unit_det(const LaurentMatrix& h) {
  const LaurentScalar det = h.det();
  if (!det.exact() || det.zero_to_precision() || *det.valuation() != 0 || det.top() != 0)
    throw Error(ErrorKind::kPrecondition, "determinant is not a nonzero constant");
  const LaurentScalar inv = det.inverse();
  const LaurentMatrix adj = h.adjugate();
  return {adj.a * inv, adj.b * inv, adj.c * inv, adj.d * inv};
}

}  // namespace uac
