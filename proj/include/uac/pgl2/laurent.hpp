#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uac/pgl2/field.hpp"

namespace uac {

/// Truncated Laurent series over F_q in the uniformiser e. The value is
/// known modulo e^prec; prec == kExact marks a Laurent polynomial known
/// exactly. Precision is tracked pessimistically through arithmetic.
class LaurentScalar {
 public:
  static constexpr int kExact = 1 << 28;

  explicit LaurentScalar(FieldPtr field, int prec = kExact);  // zero
  /// sum_i coeffs[i] e^(val+i), known to e^prec
  LaurentScalar(FieldPtr field, int val, std::vector<int> coeffs, int prec = kExact);
  static LaurentScalar constant(FieldPtr field, int c, int prec = kExact);
  static LaurentScalar monomial(FieldPtr field, int c, int n, int prec = kExact);

  const FieldPtr& field() const noexcept { return field_; }
  int prec() const noexcept { return prec_; }
  bool exact() const noexcept { return prec_ >= kExact; }
  /// No nonzero coefficient below the precision bound.
  bool zero_to_precision() const noexcept { return c_.empty(); }
  bool exact_zero() const noexcept { return c_.empty() && exact(); }
  /// nullopt is +infinity (exact zero); zero-to-precision throws kIndeterminate.
  std::optional<int> valuation() const;
  /// certified lower bound: the valuation, or prec when nothing is known
  int valuation_bound() const noexcept;
  int coeff(int n) const;
  /// Largest exponent with a stored coefficient (only meaningful when nonzero).
  int top() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }

  LaurentScalar with_precision(int prec) const;
  /// multiply by e^n (exact)
  LaurentScalar shifted(int n) const;
  LaurentScalar operator-() const;
  friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  /// Inverse of a nonzero element. Exact non-monomials are expanded to
  /// relative precision rel_prec.
  LaurentScalar inverse(int rel_prec = 32) const;

  std::string to_string() const;
  /// "c0+c1e+c2e^2@v", "0", "-1+e@-1"; "+O(e^N)" suffix sets precision.
  static LaurentScalar parse(FieldPtr field, std::string_view text, int prec = kExact);

 private:
  void normalize();
  FieldPtr field_;
  int lo_ = 0;
  std::vector<int> c_;
  int prec_ = kExact;
};

enum class IwahoriClass { kI1, kI2, kNeither };
const char* to_string(IwahoriClass c);

/// 2x2 representative in GL2(F_q((e))) of a PGL2 element.
struct LaurentMatrix {
  LaurentScalar a, b, c, d;  // [[a,b],[c,d]]

  static LaurentMatrix identity(FieldPtr field);
  LaurentScalar det() const;
  LaurentScalar trace() const { return a + d; }
  LaurentMatrix adjugate() const;
  LaurentMatrix shifted(int n) const;
  LaurentMatrix with_precision(int prec) const;
  friend LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y);
  /// every entry of x - y zero to precision
  static bool agree(const LaurentMatrix& x, const LaurentMatrix& y);

  std::string to_string() const;
  /// "a,b;c,d"
  static LaurentMatrix parse(FieldPtr field, std::string_view text, int prec = LaurentScalar::kExact);
};

}  // namespace uac
