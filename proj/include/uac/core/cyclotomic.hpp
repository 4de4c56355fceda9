#pragma once

#include <string>
#include <vector>

#include "uac/core/rational.hpp"

namespace uac {

/// Element of Q(zeta_m) as a residue modulo the m-th cyclotomic polynomial,
/// coefficients on 1, z, ..., z^{phi(m)-1}.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}  // NOLINT: scalars embed
  Cyclotomic(Rational v);                           // NOLINT
  /// zeta_m^k
  static Cyclotomic zeta(long m, long k);

  long conductor() const noexcept { return m_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  /// Same element written in conductor L (m must divide L).
  Cyclotomic in_conductor(long L) const;
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless rational
  /// Complex conjugate (zeta -> zeta^{-1}).
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator-(Cyclotomic a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "1/2 + z4", "-z3^2", "0".
  std::string to_string() const;

 private:
  Cyclotomic(long m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  static Cyclotomic reduce(long m, std::vector<Rational> poly);

  long m_ = 1;
  std::vector<Rational> c_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(long m);
long euler_phi(long m);

}  // namespace uac
