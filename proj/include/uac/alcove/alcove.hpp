#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uac/core/linalg.hpp"
#include "uac/coxeter/weyl.hpp"

namespace uac {

/// c = re + im*sqrt(-1) with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// The order used on the coordinates: a+bi > 0 iff a > 0, or a = 0 and b > 0.
bool is_positive(const GaussianRational& c);

/// Point of the level-1 hyperplane: sum_i n_i c_i = 1.
class LevelOnePoint {
 public:
  LevelOnePoint(const CartanDatum& datum, std::vector<GaussianRational> coords);
  static LevelOnePoint real(const CartanDatum& datum, const std::vector<Rational>& coords);

  const std::vector<GaussianRational>& coords() const noexcept { return coords_; }
  bool is_real() const;
  std::vector<Rational> real_parts() const;
  std::string to_string() const;

 private:
  std::vector<GaussianRational> coords_;
};

/// Support S of the cell containing x, or nullopt if x lies in no cell.
std::optional<NodeSet> cell_of(const LevelOnePoint& x);

/// Finite-order element of Hom(L, C*), stored as values in Q/Z on the dual basis.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<Rational> values);

  const std::vector<Rational>& values() const noexcept { return values_; }
  std::size_t rank() const noexcept { return values_.size(); }
  /// Least m with m*t = 0.
  long order() const;
  bool is_identity() const { return order() == 1; }
  std::string to_string() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.values_ < b.values_; }

 private:
  std::vector<Rational> values_;
};

/// The group generated by the ss_k (k not in J) acting on z^1_J, with its
/// finite quotient (the linear parts) and the translation lattice L'.
/// Vectors are written in the coordinates b'_k, k in the complement of J.
class JQuotient {
 public:
  static JQuotient build(DatumPtr datum, NodeSet j, std::size_t budget = 100000);

  const CartanDatum& datum() const noexcept { return *datum_; }
  const DatumPtr& datum_ptr() const noexcept { return datum_; }
  const NodeSet& j() const noexcept { return j_; }
  const NodeSet& jcheck() const noexcept { return jcheck_; }
  const CosetGeneratorResult& generators() const noexcept { return gens_; }

  /// Rank of L' (= |J-check| - 1, or 0 in the degenerate case).
  std::size_t rank() const noexcept { return basis_.cols(); }
  /// Columns span L'.
  const QMatrix& lattice_basis() const noexcept { return basis_; }
  /// Coordinates of a level-0 vector in the lattice basis.
  std::vector<Rational> coordinates(const std::vector<Rational>& x) const;

  std::size_t finite_order() const noexcept { return finite_.size(); }
  const QMatrix& linear_part(std::size_t a) const { return finite_[a]; }
  /// Action on L' coordinates (integer, invertible).
  const ZMatrix& lattice_action(std::size_t a) const { return lattice_action_[a]; }
  /// Action on L coordinates: inverse transpose of lattice_action.
  const ZMatrix& dual_lattice_action(std::size_t a) const { return dual_action_[a]; }
  /// ShortLex word in generator positions (indices into generators().generators).
  const std::vector<int>& word(std::size_t a) const { return words_[a]; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const;
  std::size_t identity() const noexcept { return 0; }
  /// Index of the linear part of an element of the minimal-coset subgroup.
  std::size_t finite_image(const WeylElement& w) const;

  TorusPoint act(std::size_t a, const TorusPoint& t) const;
  std::vector<std::int64_t> act_dual(std::size_t a, const std::vector<std::int64_t>& y) const;

  /// Restriction of w to span{b'_k : k in J-check} (throws if not invariant).
  QMatrix restrict(const WeylElement& w) const;
  /// Affine action on coordinates of z^1_J.
  std::vector<Rational> apply(const WeylElement& w, const std::vector<Rational>& x) const;

 private:
  DatumPtr datum_;
  NodeSet j_, jcheck_;
  CosetGeneratorResult gens_;
  QMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<QMatrix> finite_;
  std::map<std::vector<Rational>, std::size_t> index_;
  std::vector<ZMatrix> lattice_action_;
  std::vector<ZMatrix> dual_action_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Default k_J: 0 for J empty, else the least node outside J.
int default_k(const CartanDatum& datum, const NodeSet& j);

/// p_J(d): class of d - b'_k / n_k in Q (x) L' / L'.
TorusPoint p_j(const JQuotient& q, const LevelOnePoint& d, std::optional<int> k = std::nullopt);

struct LiftCheck {
  bool ok = false;
  std::size_t subgroup_order = 0;
  std::size_t stabilizer_order = 0;
  std::string detail;
};

struct StabilizerResult {
  std::vector<std::size_t> elements;  // indices into the finite quotient
  std::optional<LiftCheck> lift;
};

/// Stabilizer of t in the finite quotient; with S given, also checks that
/// <ss_k : k in S-check minus J> maps bijectively onto it.
StabilizerResult torus_stabilizer(const JQuotient& q, const TorusPoint& t, const std::optional<NodeSet>& s = std::nullopt);

/// Elements of the subgroup of the minimal-coset group generated by ss_k, k in nodes.
std::vector<WeylElement> coset_subgroup(const JQuotient& q, const NodeSet& nodes, std::size_t budget = 100000);

/// Real points of D_J with coordinates of denominator <= max_den.
std::vector<LevelOnePoint> rational_grid(const CartanDatum& datum, const NodeSet& j, int max_den);

}  // namespace uac
