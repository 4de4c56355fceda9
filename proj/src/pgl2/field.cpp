#include "uac/pgl2/field.hpp"

#include <map>
#include <mutex>

#include "uac/core/error.hpp"

namespace uac {

namespace {

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i, a /= p) d[i] = a % p;
  return d;
}

int number(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// product of polynomials of degree < k reduced by the monic modulus
std::vector<int> polymul(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& mod, int p) {
  const int k = static_cast<int>(a.size());
  std::vector<int> c(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  for (int i = 2 * k - 1; i >= k; --i) {
    const int f = c[i];
    if (!f) continue;
    for (int j = 0; j <= k; ++j) c[i - k + j] = ((c[i - k + j] - f * mod[j]) % p + p) % p;
  }
  c.resize(k);
  return c;
}

bool irreducible(const std::vector<int>& mod, int p) {
  // no root-free shortcut: check for divisors of degree <= k/2 by brute force
  const int k = static_cast<int>(mod.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      std::vector<int> div = digits(c, p, d);
      div.push_back(1);
      std::vector<int> r = mod;
      for (int i = k; i >= d; --i) {
        const int f = r[i];
        if (!f) continue;
        for (int j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - f * div[j]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero &= r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::make(int q) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  if (q < 2 || q > 256) throw Error(ErrorKind::kPrecondition, "field size must lie in [2,256]");
  int p = 2;
  while (q % p) ++p;
  int k = 0;
  for (int r = q; r > 1; r /= p) {
    if (r % p) throw Error(ErrorKind::kPrecondition, std::to_string(q) + " is not a prime power");
    ++k;
  }
  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->q_ = q;
  f->p_ = p;
  f->k_ = k;
  std::vector<int> mod(k + 1, 0);
  mod[k] = 1;
  if (k == 1) {
    mod[0] = 0;
  } else {
    int count = q;
    for (int c = 0; c < count; ++c) {
      auto low = digits(c, p, k);
      for (int i = 0; i < k; ++i) mod[i] = low[i];
      if (mod[0] != 0 && irreducible(mod, p)) break;
    }
  }
  f->add_.assign(q * q, 0);
  f->mul_.assign(q * q, 0);
  f->neg_.assign(q, 0);
  f->inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, k);
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - da[i]) % p;
    f->neg_[a] = number(n, p);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, k);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      f->add_[a * q + b] = number(s, p);
      f->mul_[a * q + b] = k == 1 ? (a * b) % p : number(polymul(da, db, mod, p), p);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f->mul_[a * q + b] == 1) f->inv_[a] = b;
  cache[q] = f;
  return f;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error(ErrorKind::kPrecondition, "division by zero in F_" + std::to_string(q_));
  return inv_[a];
}

int FiniteField::from_int(long n) const { return static_cast<int>(((n % p_) + p_) % p_); }

std::string FiniteField::to_string(int a) const { return std::to_string(a); }

}  // namespace uac
