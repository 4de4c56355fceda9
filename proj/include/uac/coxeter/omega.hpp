#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uac/coxeter/weyl.hpp"

namespace uac {

/// Mark- and pairing-preserving permutation of the nodes.
class DiagramAutomorphism {
 public:
  explicit DiagramAutomorphism(std::vector<int> perm) : perm_(std::move(perm)) {}
  static DiagramAutomorphism identity(int size);

  int operator()(int i) const { return perm_[i]; }
  const std::vector<int>& permutation() const noexcept { return perm_; }
  int size() const noexcept { return static_cast<int>(perm_.size()); }
  bool is_identity() const;
  int fixed_points() const;
  int order() const;
  DiagramAutomorphism inverse() const;
  NodeSet image(const NodeSet& s) const;

  /// (a*b)(i) = a(b(i))
  friend DiagramAutomorphism operator*(const DiagramAutomorphism& a, const DiagramAutomorphism& b);
  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
  friend bool operator<(const DiagramAutomorphism& a, const DiagramAutomorphism& b) { return a.perm_ < b.perm_; }

  std::string to_string() const;

 private:
  std::vector<int> perm_;
};

/// Omega, closed under composition, identity first then sorted.
std::vector<DiagramAutomorphism> omega_group(const CartanDatum& datum);
/// {xi in Omega : xi(J) = J}
std::vector<DiagramAutomorphism> omega_stabilizer(const CartanDatum& datum, const NodeSet& j);

/// Ad(xi)(w) = xi w xi^{-1}
WeylElement conjugate(const DiagramAutomorphism& xi, const WeylElement& w);

/// xi * w with xi in Omega and w in W'.
class ExtendedWeylElement {
 public:
  ExtendedWeylElement(DiagramAutomorphism omega, WeylElement weyl);
  explicit ExtendedWeylElement(WeylElement weyl);

  const DiagramAutomorphism& omega_part() const noexcept { return omega_; }
  const WeylElement& weyl_part() const noexcept { return weyl_; }

  /// Action on V†: permutation matrix of xi times the action of w.
  ZMatrix dual_action() const;
  ExtendedWeylElement inverse() const;
  bool is_identity() const { return omega_.is_identity() && weyl_.is_identity(); }

  /// "om<j>|word" with j the index in omega_group, or the bare word when j = 0.
  std::string to_string() const;
  static ExtendedWeylElement parse(DatumPtr datum, std::string_view text);

  friend ExtendedWeylElement operator*(const ExtendedWeylElement& a, const ExtendedWeylElement& b);
  friend bool operator==(const ExtendedWeylElement& a, const ExtendedWeylElement& b) {
    return a.omega_ == b.omega_ && a.weyl_ == b.weyl_;
  }

 private:
  DiagramAutomorphism omega_;
  WeylElement weyl_;
};

std::optional<int> element_order(const ExtendedWeylElement& w, int cap = 24);

/// Orbits of <omega> on the complement of J, sorted by least element.
std::vector<NodeSet> omega_orbits(const DiagramAutomorphism& omega, const NodeSet& jcheck);

struct FixedGenerator {
  NodeSet orbit;
  WeylElement element;
};

struct FixedGeneratorResult {
  std::vector<FixedGenerator> generators;
  std::vector<NodeSet> failed;
  bool ok() const noexcept { return failed.empty(); }
};

FixedGeneratorResult fixed_subgroup_generators(DatumPtr datum, const NodeSet& j, const DiagramAutomorphism& omega);

enum class SplitCase { kKernelTrivial, kImageTrivial, kBothOrderTwo };

struct OmegaSplitting {
  SplitCase which;
  std::vector<DiagramAutomorphism> kernel;  // Omega_{J,1}
  /// Omega_{J,2} as permutations of the generator list.
  std::vector<std::vector<int>> image;
  /// iso[a][b] is the element of Omega_J matching (kernel[a], image[b]).
  std::vector<std::vector<DiagramAutomorphism>> iso;
  /// Case (iii) distinguished element, when applicable.
  std::optional<DiagramAutomorphism> gamma;
};

OmegaSplitting omega_splitting(DatumPtr datum, const NodeSet& j, const DiagramAutomorphism& omega);

}  // namespace uac
