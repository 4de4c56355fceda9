#include "uac/fourier/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uac/core/error.hpp"

namespace uac {

namespace {

using i64 = std::int64_t;

i64 pmod(i64 a, i64 p) { return ((a % p) + p) % p; }

i64 power(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = pmod(b, p);
  for (; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

i64 inv_mod(i64 a, i64 p) { return power(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using PMat = std::vector<std::vector<i64>>;

// basis of {c : m c = 0} over F_p, as vectors
std::vector<std::vector<i64>> nullspace_mod(PMat m, std::size_t cols, i64 p) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && m[k][c] == 0) ++k;
    if (k == rows) continue;
    std::swap(m[k], m[r]);
    const i64 iv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = x * iv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const i64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = pmod(m[i][j] - f * m[r][j], p);
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<std::vector<i64>> out;
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = pmod(-m[i][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

std::string cyc_key(const std::vector<Cyclotomic>& row) {
  std::string k;
  for (const auto& x : row) k += x.to_string() + "|";
  return k;
}

}  // namespace

CharacterTable::CharacterTable(FiniteGroup g) : g_(std::move(g)) {
  const auto& classes = g_.classes();
  const std::size_t r = classes.size();
  const i64 n = g_.size();
  const i64 e = g_.exponent();
  i64 p = e + 1;
  while (!is_prime(p) || static_cast<double>(p) <= 2.0 * std::sqrt(static_cast<double>(n))) p += e;

  // class coefficient matrices M_j[k][l] = #{x in C_j : x^-1 g_l in C_k}
  std::vector<PMat> mats(r, PMat(r, std::vector<i64>(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < r; ++l)
      for (int x : classes[j]) mats[j][g_.class_of(g_.mul(g_.inv(x), classes[l][0]))][l] += 1;

  // split F_p^r into common eigenspaces
  std::vector<std::vector<std::vector<i64>>> spaces;
  {
    std::vector<std::vector<i64>> basis;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<i64> v(r, 0);
      v[i] = 1;
      basis.push_back(v);
    }
    spaces.push_back(basis);
  }
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (const auto& b : spaces) {
      if (b.size() == 1) {
        next.push_back(b);
        continue;
      }
      for (i64 lam = 0; lam < p; ++lam) {
        // (M_j - lam) B^T c = 0
        PMat a(r, std::vector<i64>(b.size(), 0));
        for (std::size_t row = 0; row < r; ++row)
          for (std::size_t c = 0; c < b.size(); ++c) {
            i64 s = 0;
            for (std::size_t k = 0; k < r; ++k) s += (mats[j][row][k] - (row == k ? lam : 0)) * b[c][k];
            a[row][c] = pmod(s, p);
          }
        auto ns = nullspace_mod(a, b.size(), p);
        if (ns.empty()) continue;
        std::vector<std::vector<i64>> sub;
        for (const auto& c : ns) {
          std::vector<i64> v(r, 0);
          for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + c[k] * b[k][i]) % p;
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error(ErrorKind::kInternalConsistency, "character table split failed for " + g_.name());

  const int id_class = g_.class_of(g_.identity());
  // primitive root of F_p, then a primitive e-th root of unity
  std::vector<i64> factors;
  for (i64 m = p - 1, q = 2; m > 1; ++q) {
    if (q * q > m) q = m;
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  i64 gen = 2;
  while (std::any_of(factors.begin(), factors.end(), [&](i64 q) { return power(gen, (p - 1) / q, p) == 1; })) ++gen;
  const i64 zeta = power(gen, (p - 1) / e, p);
  for (const auto& sp : spaces) {
    std::vector<i64> w = sp[0];
    const i64 s = inv_mod(w[id_class], p);
    for (auto& x : w) x = x * s % p;  // omega(C_l)
    i64 sum = 0;
    for (std::size_t l = 0; l < r; ++l) {
      const int inv_class = g_.class_of(g_.inv(classes[l][0]));
      sum = (sum + w[l] * w[inv_class] % p * inv_mod(static_cast<i64>(classes[l].size()), p)) % p;
    }
    const i64 d2 = n % p * inv_mod(sum, p) % p;
    i64 d = 0;
    for (i64 c = 1; c * c <= n; ++c)
      if (c * c % p == d2) d = c;
    if (d == 0) throw Error(ErrorKind::kInternalConsistency, "no character degree found");
    std::vector<i64> chi_p(r);
    for (std::size_t l = 0; l < r; ++l) chi_p[l] = d * w[l] % p * inv_mod(static_cast<i64>(classes[l].size()), p) % p;
    std::vector<Cyclotomic> row(r);
    for (std::size_t l = 0; l < r; ++l) {
      const int gl = classes[l][0];
      Cyclotomic val;
      for (i64 k = 0; k < e; ++k) {
        i64 m = 0;
        int gj = g_.identity();
        for (i64 j = 0; j < e; ++j) {
          m = (m + chi_p[g_.class_of(gj)] * power(zeta, pmod(-j * k, e), p)) % p;
          gj = g_.mul(gj, gl);
        }
        m = m * inv_mod(e % p, p) % p;
        if (m > d) throw Error(ErrorKind::kInternalConsistency, "eigenvalue multiplicity exceeds degree");
        if (m) val += Cyclotomic(static_cast<int>(m)) * Cyclotomic::zeta(e, k);
      }
      row[l] = val;
    }
    chars_.push_back(std::move(row));
  }
  std::sort(chars_.begin(), chars_.end(), [&](const auto& a, const auto& b) {
    const bool ta = std::all_of(a.begin(), a.end(), [](const Cyclotomic& x) { return x == Cyclotomic(1); });
    const bool tb = std::all_of(b.begin(), b.end(), [](const Cyclotomic& x) { return x == Cyclotomic(1); });
    if (ta != tb) return ta;
    const Rational da = a[id_class].rational_value(), db = b[id_class].rational_value();
    if (da != db) return da < db;
    return cyc_key(a) < cyc_key(b);
  });
  // exact orthogonality
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Cyclotomic s;
      for (std::size_t l = 0; l < r; ++l)
        s += Cyclotomic(static_cast<int>(classes[l].size())) * chars_[i][l] * chars_[j][l].conj();
      if (s != Cyclotomic(i == j ? static_cast<int>(n) : 0))
        throw Error(ErrorKind::kInternalConsistency, "character table of " + g_.name() + " fails orthogonality");
    }
}

long CharacterTable::degree(std::size_t i) const {
  return chars_[i][g_.class_of(g_.identity())].rational_value().get_num().get_si();
}

std::string CharacterTable::label(std::size_t i) const { return i == 0 ? "1" : "chi" + std::to_string(i); }

FourierData::FourierData(FiniteGroup g) : g_(std::move(g)) {
  for (const auto& cls : g_.classes()) {
    const int x = cls[0];
    reps_.push_back(x);
    cent_.push_back(g_.centralizer(x));
    tables_.emplace_back(g_.subgroup(cent_.back(), "Z(" + g_.label(x) + ")"));
    for (std::size_t s = 0; s < tables_.back().size(); ++s)
      pairs_.push_back({x, s, "(" + g_.label(x) + "," + tables_.back().label(s) + ")"});
  }
  // position of each centralizer element inside its subgroup
  auto local = [&](std::size_t ci, int elem) {
    const auto& c = cent_[ci];
    return static_cast<int>(std::lower_bound(c.begin(), c.end(), elem) - c.begin());
  };
  std::vector<std::size_t> pair_class;
  for (const auto& mp : pairs_) pair_class.push_back(static_cast<std::size_t>(g_.class_of(mp.x)));
  const std::size_t m = pairs_.size();
  matrix_ = Matrix<Cyclotomic>(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t ca = pair_class[a], cb = pair_class[b];
      const int x = reps_[ca], y = reps_[cb];
      Cyclotomic s;
      for (int h = 0; h < g_.size(); ++h) {
        const int gyg = g_.conj(h, y);                 // g y g^-1
        const int gxg = g_.conj(g_.inv(h), x);         // g^-1 x g
        if (!g_.commute(x, gyg)) continue;
        const auto& ta = tables_[ca];
        const auto& tb = tables_[cb];
        s += ta.value(pairs_[a].sigma, local(ca, gyg)) * tb.value(pairs_[b].sigma, local(cb, gxg)).conj();
      }
      matrix_(a, b) = s * Cyclotomic(Rational(1, static_cast<long>(cent_[ca].size() * cent_[cb].size())));
    }
}

std::vector<Cyclotomic> FourierData::apply(const std::vector<Cyclotomic>& phi) const {
  if (phi.size() != pairs_.size())
    throw Error(ErrorKind::kPrecondition,
                "vector has " + std::to_string(phi.size()) + " entries, M has " + std::to_string(pairs_.size()));
  return matrix_ * phi;
}

std::vector<std::size_t> FourierData::restricted(int central) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const std::size_t c = static_cast<std::size_t>(g_.class_of(pairs_[i].x));
    const auto& cz = cent_[c];
    const int pos = static_cast<int>(std::lower_bound(cz.begin(), cz.end(), central) - cz.begin());
    const auto& t = tables_[c];
    if (t.value(pairs_[i].sigma, pos) == Cyclotomic(static_cast<int>(t.degree(pairs_[i].sigma)))) out.push_back(i);
  }
  return out;
}

std::size_t FourierData::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (pairs_[i].label == label) return i;
  throw Error(ErrorKind::kPrecondition, "no pair " + label);
}

std::vector<MPair> m_set(const FiniteGroup& g) { return FourierData(g).pairs(); }

Matrix<Cyclotomic> pairing_matrix(const FiniteGroup& g) { return FourierData(g).matrix(); }

std::vector<Cyclotomic> apply_transform(const FiniteGroup& g, const std::vector<Cyclotomic>& phi) {
  return FourierData(g).apply(phi);
}

const std::vector<std::string>& b2_labels() {
  static const std::vector<std::string> l{"(1,1)", "(r,1)", "(1,e)", "(r,e)", "(-1,1)", "(-1,e)"};
  return l;
}

Matrix<Cyclotomic> b2_matrix() {
  // Z/2 = {1, r}: {(x,s),(y,t)} = s(y) t(x) / 2
  FourierData z2(curated_group("Z2"));
  auto idx = [&](const std::string& x, const std::string& s) {
    return z2.index_of("(" + std::string(x == "r" ? "1" : "0") + "," + (s == "e" ? "chi1" : "1") + ")");
  };
  const std::vector<std::pair<std::string, std::string>> lab{{"1", "1"}, {"r", "1"}, {"1", "e"},
                                                             {"r", "e"}, {"-1", "1"}, {"-1", "e"}};
  Matrix<Cyclotomic> m(6, 6);
  for (std::size_t a = 0; a < 6; ++a) {
    const bool minus_row = lab[a].first == "-1";
    const std::string xa = minus_row ? "1" : lab[a].first;
    for (std::size_t b = 0; b < 6; ++b) {
      const bool minus_col = lab[b].first == "-1";
      // 1-columns feed the 1-rows and r-rows; -1 rows read the -1 columns instead
      if (lab[b].first == "1" && minus_row) continue;
      if (minus_col && !minus_row) continue;
      const std::string xb = minus_col ? "1" : lab[b].first;
      m(a, b) = z2.matrix()(idx(xa, lab[a].second), idx(xb, lab[b].second));
    }
  }
  return m;
}

std::vector<Cyclotomic> b2_transform(const std::vector<Cyclotomic>& phi) {
  if (phi.size() != 6) throw Error(ErrorKind::kPrecondition, "B2 vectors have 6 entries");
  return b2_matrix() * phi;
}

FiniteGroup curated_group(const std::string& name) {
  if (name == "1") return FiniteGroup::cyclic(1);
  if (name == "Z2") return FiniteGroup::cyclic(2);
  if (name == "Z3") return FiniteGroup::cyclic(3);
  if (name == "S3") return FiniteGroup::symmetric(3);
  if (name == "Z2xZ2") return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  if (name.find("row") != std::string::npos) return FiniteGroup::parse(name);
  throw Error(ErrorKind::kNotCurated, "unknown group '" + name + "'");
}

}  // namespace uac
