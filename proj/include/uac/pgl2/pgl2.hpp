#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uac/core/linalg.hpp"
#include "uac/pgl2/field.hpp"
#include "uac/pgl2/laurent.hpp"

namespace uac {

/// Membership in I1 / I2 by the defining valuation inequalities.
/// Invariant under scalars, so a GL2 representative of a PGL2 element is enough.
IwahoriClass iwahori_class(const LaurentMatrix& m);

/// v of the discriminant (trace^2 - 4 det) of e^-m g, g in I2 with shift m.
/// The _raw form only computes; the plain form insists the answer is 1.
std::optional<int> discriminant_valuation_raw(const LaurentMatrix& g);
int discriminant_valuation(const LaurentMatrix& g);

/// h with g h = h g2 (so g2 = h^-1 g h), built from the normal forms of g and g2;
/// nullopt when trace or determinant differ. The result is checked to lie in I1.
std::optional<LaurentMatrix> conjugating_element(const LaurentMatrix& g, const LaurentMatrix& g2, int work_prec = 24);

/// Generators of the Iwahori-Bruhat cells: u1(t) = [[1,t],[0,1]], u0(t) = [[1,0],[et,1]],
/// s1 = [[0,1],[1,0]], s0 = [[0,e^-1],[e,0]], omega = [[0,1],[e,0]].
LaurentMatrix pgl2_generator(FieldPtr f, std::string_view name, int t = 0);

struct FixedPointReport {
  int count = 0;                      // fixed cosets at the certified bound
  int bound = 0;                      // word-length bound at which counts stabilised
  std::vector<std::int64_t> by_length;  // hits with word length exactly L (both omega parts)
  std::int64_t cosets = 0;            // cosets examined at the final bound
};

/// Hits x I1 (x over reduced alternating words of length <= bound times {1, omega})
/// with x^-1 g x in I2, tallied by word length.
std::vector<std::int64_t> coset_hits(const LaurentMatrix& g, int bound, bool parallel, std::int64_t* visited = nullptr);

/// Count of Iwahori cosets normalised by g; stabilisation is certified when the
/// cumulative counts at L and L+2 agree. Throws kIndeterminate past max_bound.
FixedPointReport fixed_point_count(const LaurentMatrix& g, int max_bound = 8, bool parallel = true);

/// Random elements: I1 with det in F_q^* (so the inverse is exact) and I2 in normal form.
LaurentMatrix random_i1(FieldPtr f, std::mt19937_64& rng, int degree);
LaurentMatrix random_i2(FieldPtr f, std::mt19937_64& rng, int prec);
/// exact inverse of an I1 element with constant determinant
LaurentMatrix inverse_unit_det(const LaurentMatrix& h);

/// Regular permutation module of the extended affine Weyl group of PGL2
/// (affine maps x -> +-x + k of the apartment) on the window |k| <= n.
struct WindowPermutationModule {
  int n = 0;
  std::vector<std::pair<int, int>> basis;             // (sign, k)
  std::map<std::string, std::vector<int>> action;   // "s0","s1","omega"; -1 leaves the window

  std::size_t size() const { return basis.size(); }
  /// Fixed points of a word read right to left, over basis vectors kept inside the window.
  std::int64_t trace(const std::vector<std::string>& word) const;
  /// number of orbits of the partial action
  int coinvariant_dim() const;
};
WindowPermutationModule h0_cvr_module(int n = 6);

/// basis b_n, |n| <= window; s_i b_n = -b_n (n = i mod 2), b_n + b_{n-1} + b_{n+1} otherwise (interior n)
class RecurrenceModule {
 public:
  explicit RecurrenceModule(int window);
  int window() const noexcept { return n_; }
  std::size_t size() const noexcept { return 2 * n_ + 1; }
  /// matrix of s_i (i = 1, 2) on columns b_{-N}..b_N; columns for undefined
  /// boundary cases are dropped terms outside the window
  QMatrix generator(int i) const;
  bool defined(int i, int n) const;

 private:
  int n_;
};

struct GenerationReport {
  bool generated = false;
  std::size_t coinvariant_rank = 0;
};
/// Throws kPrecondition for window < 2.
GenerationReport module_generation_check(int window);

struct RecurrenceSolution {
  std::size_t dim = 0;
  int window = 0;
  std::vector<std::vector<Rational>> basis;  // u_{-N}..u_N
  bool closed_form = false;                   // (-1)^n and (-1)^n n span the solutions
};
RecurrenceSolution recurrence_solution_space(int window = 6);
/// u_0, u_1 then u_{n+1} = -2 u_n - u_{n-1}
std::vector<Rational> iterate_recurrence(const Rational& u0, const Rational& u1, int count);

struct AlmostCharValue {
  int q = 0;
  std::int64_t value = 0;      // q * dim of the solution space
  std::int64_t steinberg = 0;  // 2q - 1
  std::int64_t unit = 0;       // value - steinberg
};
AlmostCharValue almost_char_value(int q);

/// Nonzero Hom-space dimensions i -> dim for the curated module models ("regular", "invariants", "recurrence").
std::map<int, std::size_t> a_space_dims(std::string_view zeta, std::string_view case_tag, int window = 6);

}  // namespace uac
