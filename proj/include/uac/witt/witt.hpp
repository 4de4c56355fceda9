#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "uac/pgl2/field.hpp"

namespace uac {

/// W_m(F_q) with ring operations from the Witt structure polynomials,
/// obtained once per (p, m) by lifting ghost components over Z.
class WittRing {
 public:
  static std::shared_ptr<const WittRing> make(int q, int m);

  int q() const noexcept { return field_->q(); }
  int p() const noexcept { return field_->p(); }
  int length() const noexcept { return m_; }
  const FieldPtr& field() const noexcept { return field_; }

  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> neg(const std::vector<int>& a) const;
  std::vector<int> zero() const { return std::vector<int>(m_, 0); }
  std::vector<int> one() const;
  /// n * 1 by repeated addition (n >= 0)
  std::vector<int> from_int(long n) const;

  struct Term {
    int coeff;                // reduced mod p
    std::vector<int> powers;  // one exponent per variable x_0..x_{m-1}, y_0..y_{m-1}
  };
  using Poly = std::vector<Term>;
  const Poly& sum_poly(int k) const { return sum_[k]; }
  const Poly& product_poly(int k) const { return prod_[k]; }

 private:
  WittRing() = default;
  std::vector<int> eval(const std::vector<Poly>& polys, const std::vector<int>& a, const std::vector<int>& b) const;
  FieldPtr field_;
  int m_ = 0;
  std::vector<Poly> sum_, prod_, neg_;
};

using WittRingPtr = std::shared_ptr<const WittRing>;

class WittScalar {
 public:
  WittScalar(WittRingPtr ring, std::vector<int> components);
  static WittScalar zero(WittRingPtr ring);
  static WittScalar one(WittRingPtr ring);

  const WittRingPtr& ring() const noexcept { return ring_; }
  const std::vector<int>& components() const noexcept { return c_; }

  friend WittScalar operator+(const WittScalar& a, const WittScalar& b);
  friend WittScalar operator*(const WittScalar& a, const WittScalar& b);
  friend WittScalar operator-(const WittScalar& a, const WittScalar& b);
  WittScalar operator-() const;
  friend bool operator==(const WittScalar& a, const WittScalar& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

  /// "(a0,a1,...)"
  std::string to_string() const;
  static WittScalar parse(WittRingPtr ring, std::string_view text);

 private:
  WittRingPtr ring_;
  std::vector<int> c_;
};

/// Image of (a_0,...,a_{m-1}) in Z/p^m: sum p^i [a_i], [x] = x^(p^(m-1)) mod p^m.
std::int64_t witt_to_int(const WittRing& ring, const std::vector<int>& a);

struct WittOracleReport {
  int p = 0, m = 0;
  std::int64_t pairs = 0;
  std::int64_t mismatches = 0;
  bool bijective = false;
  bool ok() const { return bijective && mismatches == 0; }
};
/// Every pair of W_m(F_p): the map to Z/p^m respects + and *. Throws for q != p.
WittOracleReport witt_oracle_sweep(int p, int m, bool parallel = true);

}  // namespace uac
