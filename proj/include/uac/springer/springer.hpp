#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uac/alcove/alcove.hpp"
#include "uac/coxeter/omega.hpp"

namespace uac {

struct UnipotentClassLabel {
  std::string group;
  std::string name;
  int dim = 0;
  friend bool operator==(const UnipotentClassLabel&, const UnipotentClassLabel&) = default;
};

struct SpringerPair {
  std::string cls;
  std::string system;
  std::string irrep;  // irreducible of the relative Weyl group
};

struct CuspidalDatum {
  NodeSet j;
  std::string cls;
  std::string system;
};

struct SpringerBlock {
  std::string name;
  CuspidalDatum cuspidal;
  int central = 1;  // value of the central character at the nontrivial central element
  std::string relgroup;
  std::vector<SpringerPair> pairs;
};

class SpringerTable {
 public:
  static SpringerTable parse(std::string_view text, std::string_view group);

  const std::string& group() const noexcept { return group_; }
  const std::vector<UnipotentClassLabel>& classes() const noexcept { return classes_; }
  const std::vector<std::string>& systems() const noexcept { return systems_; }
  const std::vector<SpringerBlock>& blocks() const noexcept { return blocks_; }

  const UnipotentClassLabel& find_class(std::string_view name) const;  // resolves aliases
  /// Block containing (class, system); throws kNotCurated if absent.
  const SpringerBlock& block_of(std::string_view cls, std::string_view system) const;
  const SpringerPair* find(std::string_view cls, std::string_view system) const;
  /// Curated closure order (reflexive, transitive).
  bool closure_leq(std::string_view c, std::string_view c2) const;
  bool closure_less(std::string_view c, std::string_view c2) const {
    return closure_leq(c, c2) && find_class(c).name != find_class(c2).name;
  }
  /// Irrep label -> (class, system) within a block.
  std::optional<SpringerPair> by_irrep(std::string_view block, std::string_view irrep) const;

  std::string render() const;

 private:
  std::string group_;
  std::vector<UnipotentClassLabel> classes_;
  std::vector<std::pair<std::string, std::string>> aliases_;
  std::vector<std::string> systems_;
  std::vector<std::pair<std::string, std::string>> closure_;
  std::vector<SpringerBlock> blocks_;
};

/// Built-in table text (identical to data/springer_sl2.txt).
std::string_view builtin_springer_text();
/// Curated table for "SL2" or "T"; anything else throws kNotCurated.
const SpringerTable& springer_table(std::string_view group);
std::vector<std::string> curated_springer_groups();

struct ZLabel {
  TorusPoint semisimple;  // p_empty(d)
  NodeSet s;
  UnipotentClassLabel cls;
  std::string system;
  int central = 1;
  friend bool operator==(const ZLabel& a, const ZLabel& b) {
    return a.semisimple == b.semisimple && a.cls == b.cls && a.system == b.system;
  }
  std::string to_string() const;
};

/// Group tag of the centralizer G_S-check for the affine A1 datum.
std::string centralizer_group(const CartanDatum& datum, const NodeSet& s);

/// Assemble the label of (S, d, c, system); the datum must be affine A1.
ZLabel assemble_z_label(DatumPtr datum, const LevelOnePoint& d, std::string_view cls, std::string_view system);

/// iota: the diagram automorphism attached to a central character (+1 / -1).
DiagramAutomorphism omega_for_central(const CartanDatum& datum, int central);

}  // namespace uac
