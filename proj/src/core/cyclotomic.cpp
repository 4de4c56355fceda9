#include "uac/core/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "uac/core/error.hpp"

namespace uac {

long euler_phi(long m) {
  long r = m;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<long>& cyclotomic_polynomial(long m) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for proper divisors d
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
      long c = num[i];  // den is monic
      q[i - den.size() + 1] = c;
      for (std::size_t k = 0; k < den.size(); ++k) num[i - den.size() + 1 + k] -= c * den[k];
    }
    num = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, num).first->second;
}

Cyclotomic::Cyclotomic(Rational v) : m_(1), c_{std::move(v)} { c_[0].canonicalize(); }

Cyclotomic Cyclotomic::reduce(long m, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    Rational c = poly[i];
    for (std::size_t k = 0; k <= deg; ++k) poly[i - deg + k] -= c * phi[k];
  }
  poly.resize(deg, Rational(0));
  return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::zeta(long m, long k) {
  if (m <= 0) throw Error(ErrorKind::kPrecondition, "conductor must be positive");
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> p(k + 1, Rational(0));
  p[k] = 1;
  return reduce(m, std::move(p));
}

Cyclotomic Cyclotomic::in_conductor(long L) const {
  if (L == m_) return *this;
  if (L % m_ != 0) throw Error(ErrorKind::kInternalConsistency, "conductor does not divide target");
  const long step = L / m_;
  std::vector<Rational> p((c_.size() - 1) * step + 1, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) p[j * step] = c_[j];
  return reduce(L, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  // conductor 2 writes -1 as the constant term too, so this is exact
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::kPrecondition, "value " + to_string() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> p(m_ + 1, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) p[(m_ - static_cast<long>(j)) % m_] += c_[j];
  return reduce(m_, std::move(p));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const long L = std::lcm(m_, o.m_);
  Cyclotomic a = in_conductor(L), b = o.in_conductor(L);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const long L = std::lcm(m_, o.m_);
  Cyclotomic a = in_conductor(L), b = o.in_conductor(L);
  std::vector<Rational> p(a.c_.size() + b.c_.size(), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  }
  return *this = reduce(L, std::move(p));
}

Cyclotomic operator-(Cyclotomic a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const long L = std::lcm(a.m_, b.m_);
  return a.in_conductor(L).c_ == b.in_conductor(L).c_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rational c = c_[j];
    std::string term;
    if (j == 0) {
      term = uac::to_string(abs(c));
    } else {
      if (abs(c) != 1) term = uac::to_string(abs(c)) + "*";
      term += "z" + std::to_string(m_);
      if (j > 1) term += "^" + std::to_string(j);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace uac
