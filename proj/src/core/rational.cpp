#include "uac/core/rational.hpp"

#include "uac/core/error.hpp"

namespace uac {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw Error(ErrorKind::kParse, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::kParse, "bad rational '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

BigInt common_denominator(const std::vector<Rational>& v) {
  BigInt d = 1;
  for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

Rational frac(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational f = r - Rational(q);
  f.canonicalize();
  return f;
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::kInternalConsistency, "integer overflow");
  return z.get_si();
}

}  // namespace uac
