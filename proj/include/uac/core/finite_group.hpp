#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace uac {

/// Finite group given by its multiplication table on 0..n-1.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Closure of permutation generators (images of 0..d-1).
  static FiniteGroup from_permutations(std::string name, const std::vector<std::vector<int>>& gens);
  /// "group NAME" then "row a b c ..." lines (one per element), optional "label i TEXT".
  static FiniteGroup parse(std::string_view text);

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return static_cast<int>(table_.size()); }
  int identity() const noexcept { return id_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^{-1}
  int order(int a) const;
  int exponent() const;
  const std::string& label(int a) const { return labels_[a]; }

  /// Classes sorted by least element; each class sorted.
  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  std::vector<int> centralizer(int x) const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  std::vector<int> center() const;

  /// Subgroup on the given elements, relabeled 0..k-1 in the given order.
  FiniteGroup subgroup(const std::vector<int>& elements, std::string name) const;

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inv_;
  int id_ = 0;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

}  // namespace uac
