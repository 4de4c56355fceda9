#include "uac/witt/witt.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <gmpxx.h>

#include "uac/core/error.hpp"

namespace uac {

namespace {

// integer polynomials in 2m variables
using Mono = std::vector<int>;
using ZPoly = std::map<Mono, mpz_class>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r[m] += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

ZPoly zadd(ZPoly a, const ZPoly& b, const mpz_class& scale = 1) {
  for (const auto& [m, c] : b) a[m] += scale * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

ZPoly zpow(const ZPoly& a, long n, std::size_t vars) {
  ZPoly r{{Mono(vars, 0), 1}};
  ZPoly base = a;
  while (n) {
    if (n & 1) r = zmul(r, base);
    n >>= 1;
    if (n) base = zmul(base, base);
  }
  return r;
}

ZPoly var(std::size_t i, std::size_t vars) {
  Mono m(vars, 0);
  m[i] = 1;
  return {{m, 1}};
}

// w_k(v_0..v_k) = sum p^i v_i^(p^(k-i))
ZPoly ghost(const std::vector<ZPoly>& v, int k, int p, std::size_t vars) {
  ZPoly r;
  mpz_class pi = 1;
  for (int i = 0; i <= k; ++i) {
    long e = 1;
    for (int j = 0; j < k - i; ++j) e *= p;
    r = zadd(r, zpow(v[i], e, vars), pi);
    pi *= p;
  }
  return r;
}

// solve w_k(S) = target_k recursively for S_k
std::vector<ZPoly> lift(const std::vector<ZPoly>& target, int p, int m, std::size_t vars) {
  std::vector<ZPoly> s;
  mpz_class pk = 1;
  for (int k = 0; k < m; ++k) {
    ZPoly rest = target[k];
    mpz_class pi = 1;
    for (int i = 0; i < k; ++i) {
      long e = 1;
      for (int j = 0; j < k - i; ++j) e *= p;
      rest = zadd(rest, zpow(s[i], e, vars), -pi);
      pi *= p;
    }
    for (auto& [mono, c] : rest) {
      if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t()))
        throw Error(ErrorKind::kInternalConsistency, "Witt polynomial has non-integral coefficient");
      c /= pk;
    }
    s.push_back(std::move(rest));
    pk *= p;
  }
  return s;
}

WittRing::Poly reduce(const ZPoly& z, int p) {
  WittRing::Poly out;
  for (const auto& [mono, c] : z) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    if (r != 0) out.push_back({static_cast<int>(r.get_si()), mono});
  }
  return out;
}

}  // namespace

std::shared_ptr<const WittRing> WittRing::make(int q, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const WittRing>> cache;
  if (m < 1 || m > 4) throw Error(ErrorKind::kPrecondition, "Witt length must lie in [1,4]");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({q, m}); it != cache.end()) return it->second;
  auto r = std::shared_ptr<WittRing>(new WittRing());
  r->field_ = FiniteField::make(q);
  r->m_ = m;
  const int p = r->field_->p();
  const std::size_t vars = 2 * m;
  std::vector<ZPoly> x, y;
  for (int i = 0; i < m; ++i) x.push_back(var(i, vars)), y.push_back(var(m + i, vars));
  std::vector<ZPoly> tsum, tprod, tneg;
  for (int k = 0; k < m; ++k) {
    const ZPoly gx = ghost(x, k, p, vars), gy = ghost(y, k, p, vars);
    tsum.push_back(zadd(gx, gy));
    tprod.push_back(zmul(gx, gy));
    tneg.push_back(zadd(ZPoly{}, gx, -1));
  }
  for (const auto& s : lift(tsum, p, m, vars)) r->sum_.push_back(reduce(s, p));
  for (const auto& s : lift(tprod, p, m, vars)) r->prod_.push_back(reduce(s, p));
  for (const auto& s : lift(tneg, p, m, vars)) r->neg_.push_back(reduce(s, p));
  cache[{q, m}] = r;
  return r;
}

std::vector<int> WittRing::eval(const std::vector<Poly>& polys, const std::vector<int>& a, const std::vector<int>& b) const {
  if (static_cast<int>(a.size()) != m_ || static_cast<int>(b.size()) != m_)
    throw Error(ErrorKind::kPrecondition, "Witt vector length mismatch");
  const FiniteField& f = *field_;
  std::vector<int> vals(a);
  vals.insert(vals.end(), b.begin(), b.end());
  std::vector<int> out(m_, 0);
  for (int k = 0; k < m_; ++k) {
    int acc = 0;
    for (const Term& t : polys[k]) {
      int v = f.from_int(t.coeff);
      for (std::size_t i = 0; i < vals.size() && v; ++i)
        for (int e = 0; e < t.powers[i]; ++e) v = f.mul(v, vals[i]);
      acc = f.add(acc, v);
    }
    out[k] = acc;
  }
  return out;
}

std::vector<int> WittRing::add(const std::vector<int>& a, const std::vector<int>& b) const { return eval(sum_, a, b); }
std::vector<int> WittRing::mul(const std::vector<int>& a, const std::vector<int>& b) const { return eval(prod_, a, b); }
std::vector<int> WittRing::neg(const std::vector<int>& a) const { return eval(neg_, a, zero()); }

std::vector<int> WittRing::one() const {
  std::vector<int> r(m_, 0);
  r[0] = 1;
  return r;
}

std::vector<int> WittRing::from_int(long n) const {
  if (n < 0) return neg(from_int(-n));
  std::vector<int> r = zero();
  for (long i = 0; i < n; ++i) r = add(r, one());
  return r;
}

WittScalar::WittScalar(WittRingPtr ring, std::vector<int> components) : ring_(std::move(ring)), c_(std::move(components)) {
  if (static_cast<int>(c_.size()) != ring_->length()) throw Error(ErrorKind::kPrecondition, "wrong number of Witt components");
  for (int x : c_)
    if (x < 0 || x >= ring_->q()) throw Error(ErrorKind::kPrecondition, "Witt component outside F_q");
}

WittScalar WittScalar::zero(WittRingPtr ring) { auto z = ring->zero(); return WittScalar(std::move(ring), std::move(z)); }
WittScalar WittScalar::one(WittRingPtr ring) { auto o = ring->one(); return WittScalar(std::move(ring), std::move(o)); }

namespace {
void same_ring(const WittScalar& a, const WittScalar& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::kPrecondition, "Witt vectors over different rings");
}
}  // namespace

WittScalar operator+(const WittScalar& a, const WittScalar& b) { same_ring(a, b); return WittScalar(a.ring_, a.ring_->add(a.c_, b.c_)); }
WittScalar operator*(const WittScalar& a, const WittScalar& b) { same_ring(a, b); return WittScalar(a.ring_, a.ring_->mul(a.c_, b.c_)); }
WittScalar operator-(const WittScalar& a, const WittScalar& b) { return a + (-b); }
WittScalar WittScalar::operator-() const { return WittScalar(ring_, ring_->neg(c_)); }

std::string WittScalar::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

WittScalar WittScalar::parse(WittRingPtr ring, std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw Error(ErrorKind::kParse, "Witt vector needs '(a0,a1,...)'");
  std::vector<int> c;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      c.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "bad Witt component '" + item + "'");
    }
  }
  return WittScalar(std::move(ring), std::move(c));
}

std::int64_t witt_to_int(const WittRing& ring, const std::vector<int>& a) {
  if (ring.q() != ring.p()) throw Error(ErrorKind::kPrecondition, "integer image needs q = p");
  const int p = ring.p(), m = ring.length();
  std::int64_t mod = 1, pm1 = 1;
  for (int i = 0; i < m; ++i) mod *= p;
  for (int i = 0; i + 1 < m; ++i) pm1 *= p;
  auto teich = [&](std::int64_t x) {
    std::int64_t r = 1, b = x % mod;
    for (std::int64_t e = pm1; e; e >>= 1) {
      if (e & 1) r = r * b % mod;
      b = b * b % mod;
    }
    return r;
  };
  std::int64_t v = 0, pi = 1;
  for (int i = 0; i < m; ++i) {
    v = (v + pi * (a[i] ? teich(a[i]) : 0)) % mod;
    pi *= p;
  }
  return v;
}

namespace {

std::vector<int> digits_of(std::int64_t idx, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i, idx /= p) d[i] = static_cast<int>(idx % p);
  return d;
}

}  // namespace

WittOracleReport witt_oracle_sweep(int p, int m, bool parallel) {
  const WittRingPtr ring = WittRing::make(p, m);
  if (ring->q() != p) throw Error(ErrorKind::kPrecondition, "oracle sweep needs a prime");
  std::int64_t size = 1;
  for (int i = 0; i < m; ++i) size *= p;
  std::vector<std::int64_t> image(size);
  std::vector<std::vector<int>> elems(size);
  for (std::int64_t i = 0; i < size; ++i) {
    elems[i] = digits_of(i, p, m);
    image[i] = witt_to_int(*ring, elems[i]);
  }
  std::vector<char> hit(size, 0);
  for (auto v : image) hit[v] = 1;
  WittOracleReport rep;
  rep.p = p;
  rep.m = m;
  rep.pairs = size * size;
  rep.bijective = std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
  std::int64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(static) if (parallel)
  for (std::int64_t i = 0; i < size; ++i)
    for (std::int64_t j = 0; j < size; ++j) {
      const auto s = witt_to_int(*ring, ring->add(elems[i], elems[j]));
      const auto t = witt_to_int(*ring, ring->mul(elems[i], elems[j]));
      bad += s != (image[i] + image[j]) % size;
      bad += t != (image[i] * image[j]) % size;
    }
  rep.mismatches = bad;
  return rep;
}

}  // namespace uac
