#include "uac/witt/lattice.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>

#include "uac/core/error.hpp"
#include "uac/pgl2/field.hpp"

namespace uac {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t md(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

int val_p(std::int64_t x, int p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0 && v < cap) x /= p, ++v;
  return v;
}

// inverse of a unit modulo m (extended Euclid)
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = md(a, m);
  while (a1) {
    const std::int64_t t = g / a1;
    std::tie(g, a1) = std::pair{a1, g - t * a1};
    std::tie(x, x1) = std::pair{x1, x - t * x1};
  }
  if (g != 1) throw Error(ErrorKind::kInternalConsistency, "non-unit inverted modulo " + std::to_string(m));
  return md(x, m);
}

int val_rational(const Rational& r, int p) {
  if (r == 0) return 1 << 20;
  mpz_class num = r.get_num(), den = r.get_den();
  int v = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) num /= p, ++v;
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) den /= p, --v;
  return v;
}

// p-integral rational reduced modulo m = p^k
std::int64_t reduce_rational(const Rational& r, std::int64_t m) {
  mpz_class num = r.get_num(), den = r.get_den();
  const std::int64_t n = mpz_class(num % m).get_si();
  const std::int64_t d = mpz_class(den % m).get_si();
  return md(n * inv_mod(d, m), m);
}

// Howell form modulo p^e; pivots written into piv
std::vector<IVec> canonical_rows(int p, int e, int n, std::vector<IVec> pool, std::vector<int>& piv) {
  const std::int64_t mod = ipow(p, e);
  for (auto& r : pool) {
    if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::kPrecondition, "generator of the wrong length");
    for (auto& x : r) x = md(x, mod);
  }
  std::vector<IVec> rows(n, IVec(n, 0));
  piv.assign(n, e);
  for (int j = 0; j < n; ++j) {
    int best = -1, bv = e;
    for (int r = 0; r < static_cast<int>(pool.size()); ++r) {
      const int v = val_p(pool[r][j], p, e);
      if (v < bv) bv = v, best = r;
    }
    if (best < 0) continue;
    IVec pr = pool[best];
    pool.erase(pool.begin() + best);
    const std::int64_t pk = ipow(p, bv);
    const std::int64_t u = inv_mod(pr[j] / pk, mod);
    for (auto& x : pr) x = md(x * u, mod);
    for (auto& r : pool) {
      const std::int64_t f = r[j] / pk;
      if (f)
        for (int k = 0; k < n; ++k) r[k] = md(r[k] - f * pr[k], mod);
    }
    IVec sat(n);
    const std::int64_t s = ipow(p, e - bv);
    for (int k = 0; k < n; ++k) sat[k] = md(pr[k] * s, mod);
    pool.push_back(std::move(sat));
    std::erase_if(pool, [](const IVec& r) { return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; }); });
    rows[j] = std::move(pr);
    piv[j] = bv;
  }
  for (int j = 0; j < n; ++j) {
    if (piv[j] == e) continue;
    const std::int64_t pk = ipow(p, piv[j]);
    for (int i = 0; i < j; ++i) {
      const std::int64_t f = rows[i][j] / pk;
      if (f)
        for (int k = 0; k < n; ++k) rows[i][k] = md(rows[i][k] - f * rows[j][k], mod);
    }
  }
  return rows;
}

std::vector<int> smith(int p, int e, std::vector<IVec> m) {
  const std::int64_t mod = ipow(p, e);
  std::vector<int> out;
  for (auto& r : m)
    for (auto& x : r) x = md(x, mod);
  while (!m.empty() && !m[0].empty()) {
    int bi = -1, bj = -1, bv = e;
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
      for (int j = 0; j < static_cast<int>(m[i].size()); ++j) {
        const int v = val_p(m[i][j], p, e);
        if (v < bv) bv = v, bi = i, bj = j;
      }
    if (bi < 0) break;
    std::swap(m[0], m[bi]);
    for (auto& r : m) std::swap(r[0], r[bj]);
    const std::int64_t pk = ipow(p, bv);
    const std::int64_t u = inv_mod(m[0][0] / pk, mod);
    for (auto& x : m[0]) x = md(x * u, mod);
    for (std::size_t i = 1; i < m.size(); ++i) {
      const std::int64_t f = m[i][0] / pk;
      for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] = md(m[i][k] - f * m[0][k], mod);
    }
    // column operations clear the rest of the pivot row
    out.push_back(e - bv);
    m.erase(m.begin());
    for (auto& r : m) r.erase(r.begin());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LatticeSubmodule::LatticeSubmodule(int p, int e, int n, const std::vector<IVec>& generators)
    : p_(p), e_(e), n_(n), mod_(ipow(p, e)) {
  if (p < 2 || e < 0 || n < 1) throw Error(ErrorKind::kPrecondition, "bad ambient module");
  rows_ = canonical_rows(p, e, n, generators, piv_);
  smith_ = smith(p, e, generators);
}

int LatticeSubmodule::d() const { return std::accumulate(smith_.begin(), smith_.end(), 0); }

int LatticeSubmodule::quotient_d() const { return std::accumulate(piv_.begin(), piv_.end(), 0); }

bool LatticeSubmodule::contains(const IVec& v0) const {
  IVec v(v0);
  for (auto& x : v) x = md(x, mod_);
  for (int j = 0; j < n_; ++j) {
    if (v[j] == 0) continue;
    const std::int64_t pk = ipow(p_, piv_[j]);
    if (piv_[j] == e_ || v[j] % pk) return false;
    const std::int64_t f = v[j] / pk;
    for (int k = 0; k < n_; ++k) v[k] = md(v[k] - f * rows_[j][k], mod_);
  }
  return true;
}

QMatrix LatticeSubmodule::lattice_basis() const {
  QMatrix b(n_, n_);
  for (int j = 0; j < n_; ++j) {
    if (piv_[j] == e_) {
      b(j, j) = Rational(mod_);
      continue;
    }
    for (int k = 0; k < n_; ++k) b(j, k) = Rational(rows_[j][k]);
  }
  return b;
}

std::string LatticeSubmodule::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j < n_; ++j) {
    if (j) os << ';';
    for (int k = 0; k < n_; ++k) os << (k ? "," : "") << rows_[j][k];
  }
  os << "] mod " << p_ << '^' << e_;
  return os.str();
}

LieLatticeDatum LieLatticeDatum::sl2(int p) {
  LieLatticeDatum g;
  g.name = "sl2";
  g.p = p;
  g.n = 3;
  // basis e, h, f: [e,h] = -2e, [e,f] = h, [h,f] = -2f
  g.bracket.assign(3, std::vector<IVec>(3, IVec(3, 0)));
  auto set = [&](int i, int j, IVec v) {
    g.bracket[i][j] = v;
    for (auto& x : v) x = -x;
    g.bracket[j][i] = v;
  };
  set(0, 1, {-2, 0, 0});
  set(0, 2, {0, 1, 0});
  set(1, 2, {0, 0, -2});
  // Killing form tr(ad x ad y)
  g.gram.assign(3, IVec(3, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t t = 0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) t += g.bracket[i][l][k] * g.bracket[j][k][l];
      g.gram[i][j] = t;
    }
  QMatrix gm(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gm(i, j) = Rational(g.gram[i][j]);
  // det by cofactors
  const Rational det = gm(0, 0) * (gm(1, 1) * gm(2, 2) - gm(1, 2) * gm(2, 1)) -
                       gm(0, 1) * (gm(1, 0) * gm(2, 2) - gm(1, 2) * gm(2, 0)) +
                       gm(0, 2) * (gm(1, 0) * gm(2, 1) - gm(1, 1) * gm(2, 0));
  if (p < 2 || det == 0 || val_rational(det, p) != 0)
    throw Error(ErrorKind::kPrecondition, "Killing form of sl2 degenerates mod " + std::to_string(p));
  return g;
}

IVec LieLatticeDatum::lie(const IVec& u, const IVec& v) const {
  IVec w(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!u[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!v[j]) continue;
      for (int k = 0; k < n; ++k) w[k] += u[i] * v[j] * bracket[i][j][k];
    }
  }
  return w;
}

std::int64_t LieLatticeDatum::pair(const IVec& u, const IVec& v) const {
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += u[i] * gram[i][j] * v[j];
  return s;
}

LatticeSubmodule sharp(const LieLatticeDatum& g, const LatticeSubmodule& z) {
  if (z.rank() != g.n || z.p() != g.p) throw Error(ErrorKind::kPrecondition, "submodule does not live in this datum's ambient");
  const QMatrix b = z.lattice_basis();
  QMatrix gm(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) gm(i, j) = Rational(g.gram[i][j]);
  const auto inv = inverse(b * gm);
  if (!inv) throw Error(ErrorKind::kPrecondition, "degenerate Gram matrix");
  std::vector<IVec> gens;
  for (int c = 0; c < g.n; ++c) {
    IVec row(g.n);
    for (int k = 0; k < g.n; ++k) {
      const Rational x = (*inv)(k, c) * Rational(z.modulus());
      if (val_rational(x, g.p) < 0) throw Error(ErrorKind::kPrecondition, "dual lattice leaves the ambient");
      row[k] = reduce_rational(x, z.modulus());
    }
    gens.push_back(std::move(row));
  }
  return LatticeSubmodule(z.p(), z.e(), z.rank(), gens);
}

bool is_self_dual_isotropic(const LieLatticeDatum& g, int n, const LatticeSubmodule& z) {
  if (z.e() != 2 * n) throw Error(ErrorKind::kPrecondition, "submodule is not in V_n");
  if (z.d() != n * g.n) return false;
  for (const auto& u : z.rows())
    for (const auto& v : z.rows())
      if (md(g.pair(u, v), z.modulus()) != 0) return false;
  return true;
}

bool is_lie_closed(const LieLatticeDatum& g, int n, const LatticeSubmodule& z) {
  if (z.e() != 2 * n) throw Error(ErrorKind::kPrecondition, "submodule is not in V_n");
  const std::int64_t m3 = ipow(g.p, 3 * n);
  std::vector<IVec> z1 = z.rows();
  for (int i = 0; i < g.n; ++i) {
    IVec v(g.n, 0);
    v[i] = z.modulus();
    z1.push_back(std::move(v));
  }
  for (const auto& u : z1)
    for (const auto& v : z1) {
      const IVec w = g.lie(u, v);
      for (const auto& x : z1)
        if (md(g.pair(w, x), m3) != 0) return false;
    }
  return true;
}

bool lattice_lie_closed(const LieLatticeDatum& g, int n, const LatticeSubmodule& z) {
  const QMatrix b = z.lattice_basis();
  const auto binv = inverse(b);
  if (!binv) throw Error(ErrorKind::kInternalConsistency, "singular lattice basis");
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      IVec u(g.n), v(g.n);
      for (int k = 0; k < g.n; ++k) u[k] = b(i, k).get_num().get_si(), v[k] = b(j, k).get_num().get_si();
      const IVec w = g.lie(u, v);
      for (int c = 0; c < g.n; ++c) {
        Rational coord = 0;
        for (int k = 0; k < g.n; ++k) coord += Rational(w[k]) * (*binv)(k, c);
        if (val_rational(coord, g.p) < n) return false;
      }
    }
  return true;
}

std::vector<LatticeSubmodule> enumerate_submodules(int p, int e, int n, int d_filter, bool parallel, std::int64_t budget) {
  std::vector<std::vector<int>> types;
  std::vector<int> a(n, 0);
  std::int64_t total = 0;
  for (;;) {
    int d = 0;
    for (int x : a) d += e - x;
    if (d_filter < 0 || d == d_filter) {
      std::int64_t c = 1;
      for (int i = 0; i < n; ++i)
        if (a[i] < e)
          for (int k = i + 1; k < n; ++k) c *= ipow(p, a[k]);
      total += c;
      types.push_back(a);
    }
    int i = n - 1;
    while (i >= 0 && a[i] == e) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  if (total > budget)
    throw Error(ErrorKind::kBudget, std::to_string(total) + " candidate submodules exceed the budget " + std::to_string(budget));
  std::vector<std::vector<LatticeSubmodule>> found(types.size());
  std::exception_ptr failure;
  const long nt = static_cast<long>(types.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long t = 0; t < nt; ++t) {
    try {
      const auto& ty = types[t];
      // free slots (i, k): row i has a pivot, k > i, entry in [0, p^a_k)
      std::vector<std::pair<int, int>> slots;
      std::vector<std::int64_t> radix;
      for (int i = 0; i < n; ++i)
        if (ty[i] < e)
          for (int k = i + 1; k < n; ++k) slots.emplace_back(i, k), radix.push_back(ipow(p, ty[k]));
      std::vector<IVec> rows(n, IVec(n, 0));
      for (int i = 0; i < n; ++i)
        if (ty[i] < e) rows[i][i] = ipow(p, ty[i]);
      std::vector<std::int64_t> digit(slots.size(), 0);
      std::vector<int> piv;
      for (;;) {
        for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = digit[s];
        if (canonical_rows(p, e, n, rows, piv) == rows) found[t].emplace_back(p, e, n, rows);
        std::size_t s = 0;
        while (s < digit.size() && ++digit[s] == radix[s]) digit[s++] = 0;
        if (s == digit.size()) break;
      }
    } catch (...) {
#pragma omp critical(uac_enum_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<LatticeSubmodule> out;
  for (auto& f : found)
    for (auto& z : f) out.push_back(std::move(z));
  return out;
}

XnReport enumerate_X_n(const LieLatticeDatum& g, int n, bool parallel, std::int64_t budget) {
  if (n < 0) throw Error(ErrorKind::kPrecondition, "n must be nonnegative");
  XnReport rep;
  rep.p = g.p;
  rep.n = n;
  const int e = 2 * n;
  // route 1: every lattice p^n L0 <= L <= p^-n L0, dual and bracket computed over Q
  const auto all = enumerate_submodules(g.p, e, g.n, -1, parallel, budget);
  rep.candidates = static_cast<std::int64_t>(all.size());
  std::vector<char> self_dual(all.size(), 0), closed(all.size(), 0), dual_ok(all.size(), 0);
  std::exception_ptr failure;
  const long na = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long i = 0; i < na; ++i) {
    try {
      const LatticeSubmodule s = sharp(g, all[i]);
      self_dual[i] = s == all[i];
      closed[i] = self_dual[i] && lattice_lie_closed(g, n, all[i]);
      dual_ok[i] = all[i].d() + all[i].quotient_d() == e * g.n && all[i].d() == s.quotient_d();
    } catch (...) {
#pragma omp critical(uac_xn_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  rep.duality = std::all_of(dual_ok.begin(), dual_ok.end(), [](char c) { return c; });
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (self_dual[i]) rep.self_dual.push_back(all[i]);
    if (closed[i]) rep.direct.push_back(all[i]);
  }
  // route 2: Lagrangian submodules of V_n, then the trilinear test in V'_n
  for (const auto& z : enumerate_submodules(g.p, e, g.n, n * g.n, parallel, budget)) {
    if (!is_self_dual_isotropic(g, n, z)) continue;
    rep.e_prime.push_back(z);
    if (is_lie_closed(g, n, z)) rep.e_prime0.push_back(z);
  }
  auto sorted = [](std::vector<LatticeSubmodule> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  rep.bijection_e = sorted(rep.self_dual) == sorted(rep.e_prime);
  rep.bijection_x = sorted(rep.direct) == sorted(rep.e_prime0);
  return rep;
}

int borel_fiber_count(const LieLatticeDatum& g, int n, const LatticeSubmodule& z, int q) {
  const FieldPtr f = FiniteField::make(q);
  if (f->p() != g.p) throw Error(ErrorKind::kPrecondition, "residue field characteristic differs from p");
  const QMatrix b = z.lattice_basis();
  const auto binv = inverse(b);
  if (!binv) throw Error(ErrorKind::kInternalConsistency, "singular lattice basis");
  const int dim = g.n;
  // structure constants of L = p^-n M in the basis p^-n b_i, reduced mod p
  std::vector<std::vector<IVec>> c(dim, std::vector<IVec>(dim, IVec(dim, 0)));
  const Rational scale = Rational(1) / Rational(ipow(g.p, n));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      IVec u(dim), v(dim);
      for (int k = 0; k < dim; ++k) u[k] = b(i, k).get_num().get_si(), v[k] = b(j, k).get_num().get_si();
      const IVec w = g.lie(u, v);
      for (int col = 0; col < dim; ++col) {
        Rational x = 0;
        for (int k = 0; k < dim; ++k) x += Rational(w[k]) * (*binv)(k, col);
        x *= scale;
        if (val_rational(x, g.p) < 0) throw Error(ErrorKind::kPrecondition, "lattice is not a Lie subring");
        c[i][j][col] = reduce_rational(x, g.p);
      }
    }
  // reduced Killing form must be nondegenerate
  QMatrix kill(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::int64_t t = 0;
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) t += c[i][l][k] * c[j][k][l];
      kill(i, j) = Rational(md(t, g.p));
    }
  {
    // rank over F_p by elimination mod p
    std::vector<IVec> m(dim, IVec(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m[i][j] = kill(i, j).get_num().get_si();
    int r = 0;
    for (int col = 0; col < dim && r < dim; ++col) {
      int piv = -1;
      for (int i = r; i < dim; ++i)
        if (m[i][col] % g.p) piv = i;
      if (piv < 0) continue;
      std::swap(m[r], m[piv]);
      const std::int64_t u = inv_mod(m[r][col], g.p);
      for (int i = 0; i < dim; ++i) {
        if (i == r) continue;
        const std::int64_t fct = md(m[i][col] * u, g.p);
        for (int k = 0; k < dim; ++k) m[i][k] = md(m[i][k] - fct * m[r][k], g.p);
      }
      ++r;
    }
    if (r < dim) throw Error(ErrorKind::kPrecondition, "reduction mod p is not reductive (Killing form degenerates)");
  }
  auto bracket = [&](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> w(dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const int xy = f->mul(x[i], y[j]);
        if (!xy) continue;
        for (int k = 0; k < dim; ++k) w[k] = f->add(w[k], f->mul(xy, f->from_int(c[i][j][k])));
      }
    return w;
  };
  int count = 0;
  // 2-dim subspaces in reduced echelon form with pivots i < j
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      std::vector<int> free1, free2;
      for (int k = i + 1; k < dim; ++k)
        if (k != j) free1.push_back(k);
      for (int k = j + 1; k < dim; ++k) free2.push_back(k);
      const std::size_t slots = free1.size() + free2.size();
      std::vector<int> digit(slots, 0);
      for (;;) {
        std::vector<int> x(dim, 0), y(dim, 0);
        x[i] = 1;
        y[j] = 1;
        for (std::size_t s = 0; s < free1.size(); ++s) x[free1[s]] = digit[s];
        for (std::size_t s = 0; s < free2.size(); ++s) y[free2[s]] = digit[free1.size() + s];
        std::vector<int> w = bracket(x, y);
        const int wi = w[i], wj = w[j];
        bool inside = true;
        for (int k = 0; k < dim; ++k) inside &= f->sub(f->sub(w[k], f->mul(wi, x[k])), f->mul(wj, y[k])) == 0;
        count += inside;
        std::size_t s = 0;
        while (s < slots && ++digit[s] == q) digit[s++] = 0;
        if (s == slots) break;
      }
    }
  return count;
}

}  // namespace uac
