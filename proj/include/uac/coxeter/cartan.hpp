#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace uac {

/// Affine Cartan datum on nodes 0..n.
///
/// pairing(i, j) is <b_i, h_j> = alpha_i(h_j).  Marks n_i satisfy
/// sum_i n_i * pairing(i, j) = 0 for every j, with n_0 = 1.  The datum also
/// carries the permutation tables realizing Omega (may be empty).
class CartanDatum {
 public:
  CartanDatum(std::string label, std::vector<std::vector<int>> pairing, std::vector<int> marks,
              std::vector<std::vector<int>> omega = {});

  /// Built-in affine types: family in {A,B,C,D,E,F,G}.
  static std::shared_ptr<const CartanDatum> affine(char family, int rank);
  /// "A1", "C2", "E8", ...
  static std::shared_ptr<const CartanDatum> from_label(std::string_view label);
  /// Plain-text table; see render() for the grammar.
  static std::shared_ptr<const CartanDatum> parse(std::string_view text);

  const std::string& label() const noexcept { return label_; }
  int size() const noexcept { return static_cast<int>(marks_.size()); }
  int rank() const noexcept { return size() - 1; }
  int pairing(int i, int j) const { return pairing_[i][j]; }
  int mark(int i) const { return marks_[i]; }
  const std::vector<int>& marks() const noexcept { return marks_; }
  const std::vector<std::vector<int>>& pairings() const noexcept { return pairing_; }
  const std::vector<std::vector<int>>& omega_table() const noexcept { return omega_; }

  /// Order of s_i s_j; 0 encodes infinity.
  int coxeter_order(int i, int j) const;

  /// type LABEL / marks ... / pairing row (one line per row) / omega perm (optional, repeated)
  std::string render() const;

  friend bool operator==(const CartanDatum&, const CartanDatum&) = default;

 private:
  std::string label_;
  std::vector<std::vector<int>> pairing_;
  std::vector<int> marks_;
  std::vector<std::vector<int>> omega_;
};

using DatumPtr = std::shared_ptr<const CartanDatum>;

/// Nodes as a sorted set; helpers shared by several modules.
using NodeSet = std::vector<int>;
NodeSet normalize(NodeSet s);
NodeSet complement(const CartanDatum& d, const NodeSet& j);
bool contains(const NodeSet& s, int k);
NodeSet unite(const NodeSet& a, const NodeSet& b);
std::string to_string(const NodeSet& s);

}  // namespace uac
