#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uac/alcove/alcove.hpp"
#include "uac/core/cyclotomic.hpp"
#include "uac/core/linalg.hpp"
#include "uac/coxeter/omega.hpp"

namespace uac {

using CMatrix = Matrix<Cyclotomic>;

CMatrix to_cyclotomic(const QMatrix& m);
Cyclotomic trace(const CMatrix& m);

/// (x, a) with x in the character lattice L (coordinates dual to the basis of L')
/// and a an index into the finite quotient.
struct SemidirectElement {
  std::vector<std::int64_t> lattice;
  std::size_t finite = 0;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// L x| W for a JQuotient; (x,a)(x',b) = (x + a.x', ab).
class SemidirectGroup {
 public:
  explicit SemidirectGroup(std::shared_ptr<const JQuotient> q) : q_(std::move(q)) {}
  const JQuotient& quotient() const noexcept { return *q_; }
  const std::shared_ptr<const JQuotient>& quotient_ptr() const noexcept { return q_; }

  SemidirectElement identity() const;
  SemidirectElement lattice(std::size_t i) const;
  SemidirectElement finite(std::size_t a) const;
  /// (0, image of ss_k).
  SemidirectElement finite_generator(int node) const;
  SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b) const;
  SemidirectElement inverse(const SemidirectElement& a) const;
  /// Affine A1 with J empty: node 1 -> (0,w), node 0 -> (l,w) where l spans L.
  SemidirectElement affine_a1_generator(int node) const;
  SemidirectElement affine_a1_word(std::string_view word) const;  // "s1s0", "e"
  std::string to_string(const SemidirectElement& g) const;

 private:
  std::shared_ptr<const JQuotient> q_;
};

/// Matrices for the group generated by ss_k, k in a node list, one per node.
struct SubgroupRep {
  std::size_t dim = 1;
  std::vector<CMatrix> gens;
  static SubgroupRep trivial(std::size_t ngens);
  static SubgroupRep sign(std::size_t ngens);
};

/// Module of L x| W given by images of the finite generators and of the lattice basis.
class FiniteDimRep {
 public:
  const SemidirectGroup& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  const TorusPoint& torus_point() const noexcept { return t_; }
  std::size_t index() const noexcept { return coset_reps_.size(); }
  const std::vector<std::size_t>& coset_reps() const noexcept { return coset_reps_; }

  const CMatrix& finite_image(std::size_t a) const { return finite_[a]; }
  CMatrix lattice_image(const std::vector<std::int64_t>& x) const;
  CMatrix image(const SemidirectElement& g) const;
  Cyclotomic character(const SemidirectElement& g) const;

  /// Throws kInternalConsistency when a defining relation fails.
  void verify_relations() const;
  /// <chi,chi> over (L/mL) x| W with m the order of the torus point.
  Rational mackey_norm() const;

  friend FiniteDimRep build_irreducible(std::shared_ptr<const JQuotient>, const LevelOnePoint&, const SubgroupRep&);

 private:
  explicit FiniteDimRep(SemidirectGroup g) : group_(std::move(g)) {}
  Cyclotomic chi(const std::vector<std::int64_t>& x, std::size_t a) const;  // chi_t(a^{-1} x)

  SemidirectGroup group_;
  TorusPoint t_;
  std::size_t dim_ = 0, rho_dim_ = 0;
  std::vector<std::size_t> coset_reps_;
  std::vector<CMatrix> finite_;  // image of (0,a) for every a
};

/// Ind from L.W_{S-check - J} to L.W of ([p_J(d)] (x) rho).
FiniteDimRep build_irreducible(std::shared_ptr<const JQuotient> q, const LevelOnePoint& d, const SubgroupRep& rho);

/// One stage of the descending filtration: E_{>=level} = span(vectors).
struct FiltrationLayer {
  int level = 0;
  QMatrix span;  // rows
};

struct TopLabel {
  NodeSet s;
  std::vector<Rational> d;
  std::string cls;
  std::string system;
};

struct CoStandardTable {
  std::string group = "affine-A1";
  std::string springer = "SL2";
  TopLabel top;
  std::size_t dim = 0;
  std::vector<std::pair<std::string, QMatrix>> gens;  // "s1", "s2"
  std::optional<QMatrix> omega;
  std::vector<FiltrationLayer> layers;

  static CoStandardTable parse(std::string_view text);
  std::string render() const;
  const QMatrix& gen(std::string_view name) const;
};

struct LayerPiece {
  int level = 0;
  std::string irrep;
  std::size_t multiplicity = 0;
  std::string cls;
  std::string system;
};

struct CoStandardData {
  CoStandardTable table;
  int top_level = 0;
  std::vector<LayerPiece> lower;  // decomposition of the layers below the top
};

/// Checks every filtration axiom; failures throw kTableRejected naming the layer.
CoStandardData load_costandard(const CoStandardTable& table);
/// zeta = ({1}, C) for PGL2.
std::string_view builtin_a1_costandard_text();
/// Same carrier with the unit representation as submodule.
std::string_view swapped_a1_costandard_text();

/// trace of w on the co-standard module; omega acts through the table's omega matrix.
Cyclotomic almost_char_cvr(const CoStandardData& data, const ExtendedWeylElement& w);
/// Looks up curated co-standard data by zeta label ("({1},C)").
Cyclotomic almost_char_cvr(std::string_view zeta, const ExtendedWeylElement& w);

/// Module of W' given by one matrix per node, optionally extended by Omega images.
struct GeneratorRep {
  DatumPtr datum;
  std::size_t dim = 0;
  std::vector<CMatrix> nodes;
  std::vector<DiagramAutomorphism> omega;  // empty: no Omega action
  std::vector<CMatrix> omega_images;
  CMatrix image(const ExtendedWeylElement& w) const;
  void verify() const;  // s_i^2 = 1, braid orders, Omega conjugation
};

/// Induction along W' -> Omega_J . W' with basis xi (x) v, xi in omega_j.
GeneratorRep omega_induce(const GeneratorRep& rep, const std::vector<DiagramAutomorphism>& omega_j);

struct IdempotentReport {
  bool ok = false;
  std::size_t group_order = 0;
  std::size_t kernel_order = 0;
  std::size_t summand_dim = 0;
  std::string detail;
};

/// Central idempotents (1 +- kappa)/2 for an order-2 kernel, checked in the
/// image of Omega_J . W' acting on V-dagger mod 4.
IdempotentReport kernel_idempotent_check(DatumPtr datum, const NodeSet& j, const DiagramAutomorphism& omega);

}  // namespace uac
