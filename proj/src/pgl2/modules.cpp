#include <numeric>

#include "uac/core/error.hpp"
#include "uac/pgl2/pgl2.hpp"
#include "uac/reps/reps.hpp"

namespace uac {

std::int64_t WindowPermutationModule::trace(const std::vector<std::string>& word) const {
  std::int64_t fixed = 0;
  for (int b = 0; b < static_cast<int>(size()); ++b) {
    int cur = b;
    for (auto it = word.rbegin(); it != word.rend() && cur >= 0; ++it) {
      auto a = action.find(*it);
      if (a == action.end()) throw Error(ErrorKind::kPrecondition, "unknown generator " + *it);
      cur = a->second[cur];
    }
    fixed += cur == b;
  }
  return fixed;
}

int WindowPermutationModule::coinvariant_dim() const {
  std::vector<int> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = static_cast<int>(size());
  for (const auto& [name, img] : action)
    for (int b = 0; b < static_cast<int>(size()); ++b) {
      if (img[b] < 0) continue;
      const int x = find(b), y = find(img[b]);
      if (x != y) parent[x] = y, --comps;
    }
  return comps;
}

WindowPermutationModule h0_cvr_module(int n) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "window must be positive");
  WindowPermutationModule m;
  m.n = n;
  for (int s : {1, -1})
    for (int k = -n; k <= n; ++k) m.basis.emplace_back(s, k);
  auto index = [&](int s, int k) -> int {
    if (k < -n || k > n) return -1;
    return (s == 1 ? 0 : 2 * n + 1) + k + n;
  };
  // left composition with x -> c - x sends x -> s x + k to x -> -s x + (c - k)
  for (auto [name, c] : {std::pair{"s1", 0}, std::pair{"s0", 2}, std::pair{"omega", 1}}) {
    std::vector<int> img;
    for (auto [s, k] : m.basis) img.push_back(index(-s, c - k));
    m.action[name] = std::move(img);
  }
  return m;
}

RecurrenceModule::RecurrenceModule(int window) : n_(window) {
  if (window < 1) throw Error(ErrorKind::kPrecondition, "window must be positive");
}

bool RecurrenceModule::defined(int i, int n) const {
  if (((n - i) % 2 + 2) % 2 == 0) return true;
  return n > -n_ && n < n_;
}

QMatrix RecurrenceModule::generator(int i) const {
  const int size = 2 * n_ + 1;
  QMatrix m(size, size);
  for (int n = -n_; n <= n_; ++n) {
    const int j = n + n_;
    if (((n - i) % 2 + 2) % 2 == 0) {
      m(j, j) = -1;
      continue;
    }
    m(j, j) = 1;
    if (j > 0) m(j - 1, j) = 1;
    if (j + 1 < size) m(j + 1, j) = 1;
  }
  return m;
}

GenerationReport module_generation_check(int window) {
  if (window < 2) throw Error(ErrorKind::kPrecondition, "window must be at least 2");
  const RecurrenceModule mod(window);
  const std::size_t size = mod.size();
  const QMatrix s[2] = {mod.generator(1), mod.generator(2)};
  QMatrix span(2, size);
  span(0, window) = 1;
  span(1, window + 1) = 1;
  for (;;) {
    const std::size_t before = span.rows();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < span.rows(); ++r) {
      rows.push_back(span.row(r));
      for (const QMatrix& g : s) {
        std::vector<Rational> img(size, 0);
        for (std::size_t i = 0; i < size; ++i)
          for (std::size_t j = 0; j < size; ++j) img[i] += g(i, j) * span(r, j);
        rows.push_back(std::move(img));
      }
    }
    QMatrix all(rows.size(), size);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t j = 0; j < size; ++j) all(r, j) = rows[r][j];
    span = row_space(all);
    if (span.rows() == before) break;
  }
  GenerationReport rep;
  rep.generated = true;
  for (int n = -window + 1; n < window; ++n) {
    QMatrix e(1, size);
    e(0, n + window) = 1;
    if (!row_span_contains(span, e)) rep.generated = false;
  }
  // coinvariants: quotient by (s_i - 1) b_n wherever the action is defined
  std::vector<std::vector<Rational>> rel;
  for (int i = 1; i <= 2; ++i)
    for (int n = -window; n <= window; ++n) {
      if (!mod.defined(i, n)) continue;
      std::vector<Rational> col = s[i - 1].col(n + window);
      col[n + window] -= 1;
      rel.push_back(std::move(col));
    }
  QMatrix r(rel.size(), size);
  for (std::size_t k = 0; k < rel.size(); ++k)
    for (std::size_t j = 0; j < size; ++j) r(k, j) = rel[k][j];
  rep.coinvariant_rank = size - rank(r);
  return rep;
}

std::vector<Rational> iterate_recurrence(const Rational& u0, const Rational& u1, int count) {
  std::vector<Rational> u{u0, u1};
  while (static_cast<int>(u.size()) < count) {
    const std::size_t n = u.size();
    u.push_back(-2 * u[n - 1] - u[n - 2]);
  }
  u.resize(count);
  return u;
}

RecurrenceSolution recurrence_solution_space(int window) {
  if (window < 2) throw Error(ErrorKind::kPrecondition, "window must be at least 2");
  const int size = 2 * window + 1;
  // -u_n = u_n + u_{n-1} + u_{n+1} at interior n
  QMatrix eq(size - 2, size);
  for (int j = 1; j + 1 < size; ++j) {
    eq(j - 1, j - 1) = 1;
    eq(j - 1, j) = 2;
    eq(j - 1, j + 1) = 1;
  }
  const QMatrix ns = nullspace(eq);
  RecurrenceSolution sol;
  sol.window = window;
  sol.dim = ns.cols();
  for (std::size_t c = 0; c < ns.cols(); ++c) sol.basis.push_back(ns.col(c));
  QMatrix closed(2, size);
  for (int n = -window; n <= window; ++n) {
    const int sign = n % 2 == 0 ? 1 : -1;
    closed(0, n + window) = sign;
    closed(1, n + window) = sign * n;
  }
  bool solves = true;
  for (int r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < eq.rows(); ++k) {
      Rational s = 0;
      for (int j = 0; j < size; ++j) s += eq(k, j) * closed(r, j);
      solves &= s == 0;
    }
  sol.closed_form = solves && rank(closed) == sol.dim;
  return sol;
}

AlmostCharValue almost_char_value(int q) {
  FiniteField::make(q);  // validates q
  AlmostCharValue r;
  r.q = q;
  // Frobenius acts on the H_{-2} layer by the scalar q and trivially on the Hom data
  r.value = static_cast<std::int64_t>(q) * static_cast<std::int64_t>(recurrence_solution_space().dim);
  r.steinberg = 2 * static_cast<std::int64_t>(q) - 1;
  r.unit = r.value - r.steinberg;
  return r;
}

namespace {

QMatrix stack(const std::vector<QMatrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  QMatrix m(rows, blocks.front().cols());
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return m;
}

}  // namespace

std::map<int, std::size_t> a_space_dims(std::string_view zeta, std::string_view case_tag, int window) {
  if (zeta != "({1},C)" && zeta != "({1},ℂ)")
    throw Error(ErrorKind::kNotCurated, "no co-standard data for " + std::string(zeta));
  const CoStandardData data = load_costandard(CoStandardTable::parse(builtin_a1_costandard_text()));
  const QMatrix& s1 = data.table.gen("s1");
  const QMatrix& s2 = data.table.gen("s2");
  const std::size_t dim = data.table.dim;
  const QMatrix id = QMatrix::identity(dim);
  const std::size_t invariants = nullspace(stack({s1 - id, s2 - id})).cols();
  std::map<int, std::size_t> out;
  if (case_tag == "regular") {
    // H_0 is the regular module of W, so Hom_W(H_0, E) = E and higher H vanish
    out[0] = dim;
  } else if (case_tag == "invariants") {
    if (invariants) out[0] = invariants;
  } else if (case_tag == "recurrence") {
    if (invariants) out[0] = invariants;
    if (window < 2) throw Error(ErrorKind::kPrecondition, "window must be at least 2");
    // f(b_n) = x_n; s_i x_n = -x_n (n = i mod 2), s_i x_n = x_n + x_{n-1} + x_{n+1} otherwise
    const int count = 2 * window + 1;
    const QMatrix* s[3] = {nullptr, &s1, &s2};
    std::vector<std::vector<Rational>> rows;
    for (int n = -window; n <= window; ++n) {
      const int j = n + window;
      for (int i = 1; i <= 2; ++i) {
        const bool parity = ((n - i) % 2 + 2) % 2 == 0;
        if (!parity && (n == -window || n == window)) continue;
        for (std::size_t r = 0; r < dim; ++r) {
          std::vector<Rational> row(count * dim, 0);
          for (std::size_t c = 0; c < dim; ++c) row[j * dim + c] += (*s[i])(r, c);
          if (parity) {
            row[j * dim + r] += 1;
          } else {
            row[j * dim + r] -= 1;
            row[(j - 1) * dim + r] -= 1;
            row[(j + 1) * dim + r] -= 1;
          }
          rows.push_back(std::move(row));
        }
      }
    }
    QMatrix sys(rows.size(), count * dim);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t c = 0; c < count * dim; ++c) sys(k, c) = rows[k][c];
    if (const std::size_t d2 = nullspace(sys).cols()) out[2] = d2;
  } else {
    throw Error(ErrorKind::kPrecondition, "unknown module model " + std::string(case_tag));
  }
  return out;
}

}  // namespace uac
