#pragma once

#include <memory>
#include <string>
#include <vector>

namespace uac {

/// F_q, q = p^k small; elements are 0..q-1 read as base-p digit vectors
/// (polynomials modulo a fixed irreducible of degree k).
class FiniteField {
 public:
  static std::shared_ptr<const FiniteField> make(int q);

  int q() const noexcept { return q_; }
  int p() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // throws on 0
  /// Image of an integer (through the prime field).
  int from_int(long n) const;
  std::string to_string(int a) const;

 private:
  FiniteField() = default;
  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace uac
