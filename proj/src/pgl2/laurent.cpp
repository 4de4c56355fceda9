#include "uac/pgl2/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "uac/core/error.hpp"

namespace uac {

namespace {

int add_prec(int p, int v) {
  if (p >= LaurentScalar::kExact) return LaurentScalar::kExact;
  return std::min(p + v, LaurentScalar::kExact - 1);
}

long parse_long(std::string_view s, std::string_view what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::kParse, "bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

LaurentScalar::LaurentScalar(FieldPtr field, int prec) : field_(std::move(field)), prec_(std::min(prec, kExact)) {}

LaurentScalar::LaurentScalar(FieldPtr field, int val, std::vector<int> coeffs, int prec)
    : field_(std::move(field)), lo_(val), c_(std::move(coeffs)), prec_(std::min(prec, kExact)) {
  for (int& x : c_) {
    if (x < 0 || x >= field_->q()) x = field_->from_int(x);
  }
  normalize();
}

LaurentScalar LaurentScalar::constant(FieldPtr field, int c, int prec) { return monomial(std::move(field), c, 0, prec); }

LaurentScalar LaurentScalar::monomial(FieldPtr field, int c, int n, int prec) {
  return LaurentScalar(std::move(field), n, std::vector<int>{c}, prec);
}

void LaurentScalar::normalize() {
  if (!exact() && !c_.empty()) {
    const long keep = static_cast<long>(prec_) - lo_;
    if (keep <= 0) c_.clear();
    else if (static_cast<long>(c_.size()) > keep) c_.resize(keep);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + lead);
    lo_ += static_cast<int>(lead);
  }
  if (c_.empty()) lo_ = 0;
}

std::optional<int> LaurentScalar::valuation() const {
  if (!c_.empty()) return lo_;
  if (exact()) return std::nullopt;
  throw Error(ErrorKind::kIndeterminate, "valuation undecided: zero modulo e^" + std::to_string(prec_));
}

int LaurentScalar::valuation_bound() const noexcept { return c_.empty() ? prec_ : lo_; }

int LaurentScalar::coeff(int n) const {
  if (!exact() && n >= prec_)
    throw Error(ErrorKind::kIndeterminate, "coefficient of e^" + std::to_string(n) + " beyond precision");
  if (c_.empty() || n < lo_ || n > top()) return 0;
  return c_[n - lo_];
}

LaurentScalar LaurentScalar::with_precision(int prec) const {
  LaurentScalar r = *this;
  r.prec_ = std::min(prec_, prec);
  r.normalize();
  return r;
}

LaurentScalar LaurentScalar::shifted(int n) const {
  LaurentScalar r = *this;
  if (!r.c_.empty()) r.lo_ += n;
  r.prec_ = add_prec(prec_, n);
  return r;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (int& x : r.c_) x = field_->neg(x);
  return r;
}

LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.field_ != b.field_) throw Error(ErrorKind::kPrecondition, "Laurent series over different fields");
  const int prec = std::min(a.prec_, b.prec_);
  if (a.c_.empty() && b.c_.empty()) return LaurentScalar(a.field_, prec);
  int lo, hi;
  if (a.c_.empty()) lo = b.lo_, hi = b.top();
  else if (b.c_.empty()) lo = a.lo_, hi = a.top();
  else lo = std::min(a.lo_, b.lo_), hi = std::max(a.top(), b.top());
  if (prec < LaurentScalar::kExact) hi = std::min(hi, prec - 1);
  if (hi < lo) return LaurentScalar(a.field_, prec);
  std::vector<int> c(hi - lo + 1, 0);
  const FiniteField& f = *a.field_;
  for (int n = lo; n <= hi; ++n) {
    int x = 0;
    if (!a.c_.empty() && n >= a.lo_ && n <= a.top()) x = a.c_[n - a.lo_];
    if (!b.c_.empty() && n >= b.lo_ && n <= b.top()) x = f.add(x, b.c_[n - b.lo_]);
    c[n - lo] = x;
  }
  return LaurentScalar(a.field_, lo, std::move(c), prec);
}

LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return a + (-b); }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.field_ != b.field_) throw Error(ErrorKind::kPrecondition, "Laurent series over different fields");
  if (a.exact_zero() || b.exact_zero()) return LaurentScalar(a.field_);
  const int prec = std::min(add_prec(a.prec_, b.valuation_bound()), add_prec(b.prec_, a.valuation_bound()));
  if (a.c_.empty() || b.c_.empty()) return LaurentScalar(a.field_, prec);
  const FiniteField& f = *a.field_;
  std::vector<int> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return LaurentScalar(a.field_, a.lo_ + b.lo_, std::move(c), prec);
}

LaurentScalar LaurentScalar::inverse(int rel_prec) const {
  if (exact_zero()) throw Error(ErrorKind::kPrecondition, "inverse of zero");
  if (c_.empty()) throw Error(ErrorKind::kIndeterminate, "inverse of an element zero modulo e^" + std::to_string(prec_));
  const FiniteField& f = *field_;
  const int v = lo_;
  const int u0inv = f.inv(c_[0]);
  if (exact() && c_.size() == 1) return monomial(field_, u0inv, -v);
  const int r = exact() ? rel_prec : prec_ - v;
  std::vector<int> w(r, 0);
  if (r > 0) w[0] = u0inv;
  for (int n = 1; n < r; ++n) {
    int s = 0;
    for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k) s = f.add(s, f.mul(c_[k], w[n - k]));
    w[n] = f.neg(f.mul(u0inv, s));
  }
  return LaurentScalar(field_, -v, std::move(w), r - v);
}

std::string LaurentScalar::to_string() const {
  std::ostringstream os;
  if (c_.empty()) {
    if (exact()) return "0";
    os << "O(e^" << prec_ << ")";
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!first) os << '+';
    first = false;
    const bool unit = c_[i] == 1;
    if (i == 0 || !unit) os << field_->to_string(c_[i]);
    if (i == 1) os << 'e';
    else if (i > 1) os << "e^" << i;
  }
  if (lo_ != 0) os << '@' << lo_;
  if (!exact()) os << "+O(e^" << prec_ << ")";
  return os.str();
}

LaurentScalar LaurentScalar::parse(FieldPtr field, std::string_view text, int prec) {
  std::string s = trim(text);
  if (auto pos = s.find("+O(e^"); pos != std::string::npos) {
    if (s.back() != ')') throw Error(ErrorKind::kParse, "bad precision suffix in '" + s + "'");
    const std::string n = s.substr(pos + 5, s.size() - pos - 6);
    prec = std::min<long>(prec, parse_long(n, s));
    s = s.substr(0, pos);
  } else if (s.rfind("O(e^", 0) == 0) {
    if (s.back() != ')') throw Error(ErrorKind::kParse, "bad precision term '" + s + "'");
    return LaurentScalar(std::move(field), std::min<long>(prec, parse_long(s.substr(4, s.size() - 5), s)));
  }
  int shift = 0;
  if (auto at = s.find('@'); at != std::string::npos) {
    shift = static_cast<int>(parse_long(trim(s.substr(at + 1)), s));
    s = s.substr(0, at);
  }
  s = trim(s);
  if (s.empty()) throw Error(ErrorKind::kParse, "empty Laurent entry");
  // split into signed terms; '-' right after '^' is an exponent sign
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if ((ch == '+' || ch == '-') && !cur.empty() && cur.back() != '^') {
      terms.push_back(cur);
      cur.clear();
      if (ch == '-') cur = "-";
      continue;
    }
    cur.push_back(ch);
  }
  if (!cur.empty()) terms.push_back(cur);
  LaurentScalar r(field, prec);
  for (const std::string& t : terms) {
    bool neg = false;
    std::string_view body = t;
    if (!body.empty() && body[0] == '-') neg = true, body.remove_prefix(1);
    const auto e = body.find('e');
    long coef = 1;
    int exp = 0;
    if (e == std::string_view::npos) {
      coef = parse_long(body, s);
    } else {
      if (e > 0) coef = parse_long(body.substr(0, e), s);
      auto rest = body.substr(e + 1);
      if (rest.empty()) exp = 1;
      else if (rest[0] == '^') exp = static_cast<int>(parse_long(rest.substr(1), s));
      else throw Error(ErrorKind::kParse, "bad term '" + t + "'");
    }
    int c = coef >= 0 && coef < field->q() ? static_cast<int>(coef) : field->from_int(coef);
    if (neg) c = field->neg(c);
    r = r + monomial(field, c, exp + shift);
  }
  return r.with_precision(prec);
}

const char* to_string(IwahoriClass c) {
  switch (c) {
    case IwahoriClass::kI1: return "I1";
    case IwahoriClass::kI2: return "I2";
    case IwahoriClass::kNeither: return "neither";
  }
  return "?";
}

LaurentMatrix LaurentMatrix::identity(FieldPtr field) {
  return {LaurentScalar::constant(field, 1), LaurentScalar(field), LaurentScalar(field), LaurentScalar::constant(field, 1)};
}

LaurentScalar LaurentMatrix::det() const { return a * d - b * c; }

LaurentMatrix LaurentMatrix::adjugate() const { return {d, -b, -c, a}; }

LaurentMatrix LaurentMatrix::shifted(int n) const { return {a.shifted(n), b.shifted(n), c.shifted(n), d.shifted(n)}; }

LaurentMatrix LaurentMatrix::with_precision(int prec) const {
  return {a.with_precision(prec), b.with_precision(prec), c.with_precision(prec), d.with_precision(prec)};
}

LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool LaurentMatrix::agree(const LaurentMatrix& x, const LaurentMatrix& y) {
  return (x.a - y.a).zero_to_precision() && (x.b - y.b).zero_to_precision() && (x.c - y.c).zero_to_precision() &&
         (x.d - y.d).zero_to_precision();
}

std::string LaurentMatrix::to_string() const {
  return a.to_string() + "," + b.to_string() + ";" + c.to_string() + "," + d.to_string();
}

LaurentMatrix LaurentMatrix::parse(FieldPtr field, std::string_view text, int prec) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorKind::kParse, "matrix needs 'a,b;c,d'");
  auto row = [&](std::string_view r) {
    const auto comma = r.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorKind::kParse, "matrix row needs two entries");
    return std::pair{LaurentScalar::parse(field, r.substr(0, comma), prec), LaurentScalar::parse(field, r.substr(comma + 1), prec)};
  };
  auto [a, b] = row(text.substr(0, semi));
  auto [c, d] = row(text.substr(semi + 1));
  return {a, b, c, d};
}

}  // namespace uac
