#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uac/core/linalg.hpp"
#include "uac/coxeter/cartan.hpp"

namespace uac {

/// Element of the affine Weyl group W, stored as its action on V† in the
/// basis b'_0..b'_n (columns are images).  The root action on V is kept
/// alongside since it is the contragredient.
class WeylElement {
 public:
  explicit WeylElement(DatumPtr datum);  // identity

  static WeylElement generator(DatumPtr datum, int i);
  static WeylElement from_word(DatumPtr datum, const std::vector<int>& word);
  /// "s0s1s0" or "e".
  static WeylElement parse(DatumPtr datum, std::string_view text);

  const CartanDatum& datum() const noexcept { return *datum_; }
  const DatumPtr& datum_ptr() const noexcept { return datum_; }
  const ZMatrix& dual_action() const noexcept { return dual_; }
  const ZMatrix& root_action() const noexcept { return root_; }

  int length() const noexcept { return length_; }
  bool is_identity() const noexcept { return length_ == 0; }
  /// ShortLex-minimal reduced word.
  std::vector<int> reduced_word() const;
  std::string to_string() const;

  std::vector<int> left_descents() const;
  std::vector<int> right_descents() const;
  bool has_right_descent(int i) const;

  WeylElement inverse() const;

  /// Translation part: w(b'_0) - b'_0, a level-0 vector of V†.
  std::vector<std::int64_t> translation() const;
  /// Linear part: equals the action on level-0 vectors and fixes b'_0.
  ZMatrix finite_part() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b);
  std::size_t hash() const noexcept;

 private:
  WeylElement(DatumPtr datum, ZMatrix dual, ZMatrix root);
  void compute_length();

  DatumPtr datum_;
  ZMatrix dual_;
  ZMatrix root_;
  int length_ = 0;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

void require_same_datum(const CartanDatum& a, const CartanDatum& b);

/// Order of w, or nullopt for infinite order (certified by a nonzero
/// translation of w^k with trivial finite part).  Throws undecided-order
/// when no k <= cap trivializes the finite part.
std::optional<int> element_order(const WeylElement& w, int cap = 24);

/// w in W_J, decided by stripping left descents.
bool in_parabolic(const WeylElement& w, const NodeSet& j);
/// All elements of the finite parabolic W_J (breadth-first, ShortLex order).
std::vector<WeylElement> parabolic_elements(DatumPtr datum, const NodeSet& j, std::size_t budget = 2'000'000);

WeylElement longest_element(DatumPtr datum, const NodeSet& j);

struct CosetGenerator {
  int node;
  WeylElement element;
};

struct CosetGeneratorResult {
  std::vector<CosetGenerator> generators;
  std::vector<int> failed;  // nodes whose ss_k is not in the minimal-coset subgroup
  bool ok() const noexcept { return failed.empty(); }
};

/// w normalizes W_J and has no right descent in J.
bool in_minimal_coset_subgroup(const WeylElement& w, const NodeSet& j);

CosetGeneratorResult min_coset_generators(DatumPtr datum, const NodeSet& j);

/// Pairwise orders of the ss_k; 0 encodes infinity.
struct CoxeterMatrix {
  std::vector<int> nodes;
  std::vector<std::vector<int>> orders;
  std::string to_string() const;
};

CoxeterMatrix quotient_coxeter_matrix(DatumPtr datum, const NodeSet& j, int order_cap = 24);

}  // namespace uac
