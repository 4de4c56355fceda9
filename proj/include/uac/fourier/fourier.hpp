#pragma once

#include <string>
#include <vector>

#include "uac/core/cyclotomic.hpp"
#include "uac/core/finite_group.hpp"
#include "uac/core/matrix.hpp"

namespace uac {

/// Irreducible characters, exact in Q(zeta_e) with e the exponent.
/// Rows are sorted: trivial first, then by degree.
class CharacterTable {
 public:
  explicit CharacterTable(FiniteGroup g);

  const FiniteGroup& group() const noexcept { return g_; }
  std::size_t size() const noexcept { return chars_.size(); }
  /// chars()[i][c]: value of the i-th character on class c.
  const std::vector<std::vector<Cyclotomic>>& chars() const noexcept { return chars_; }
  Cyclotomic value(std::size_t i, int element) const { return chars_[i][g_.class_of(element)]; }
  long degree(std::size_t i) const;
  /// "1" for the trivial character, "chi<i>" otherwise.
  std::string label(std::size_t i) const;

 private:
  FiniteGroup g_;
  std::vector<std::vector<Cyclotomic>> chars_;
};

struct MPair {
  int x = 0;             // least element of its class
  std::size_t sigma = 0;  // row in the character table of Z(x)
  std::string label;      // "(x,sigma)"
};

class FourierData {
 public:
  explicit FourierData(FiniteGroup g);

  const FiniteGroup& group() const noexcept { return g_; }
  const std::vector<MPair>& pairs() const noexcept { return pairs_; }
  /// {(x,s),(y,t)} = sum over g with x, g y g^-1 commuting of
  /// s(g y g^-1) conj(t(g^-1 x g)) / (|Z(x)| |Z(y)|)
  const Matrix<Cyclotomic>& matrix() const noexcept { return matrix_; }
  std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& phi) const;
  /// Pairs whose character is trivial on the given central element.
  std::vector<std::size_t> restricted(int central) const;
  std::size_t index_of(const std::string& label) const;

 private:
  FiniteGroup g_;
  std::vector<int> reps_;
  std::vector<std::vector<int>> cent_;  // elements of Z(x) in the group
  std::vector<CharacterTable> tables_;
  std::vector<MPair> pairs_;
  Matrix<Cyclotomic> matrix_;
};

std::vector<MPair> m_set(const FiniteGroup& g);
Matrix<Cyclotomic> pairing_matrix(const FiniteGroup& g);
std::vector<Cyclotomic> apply_transform(const FiniteGroup& g, const std::vector<Cyclotomic>& phi);

/// Curated B2 shadow of C*.<r>: labels (1,1),(r,1),(1,e),(r,e),(-1,1),(-1,e).
/// The x = r rows and x = 1 rows use the Z/2 pairing; the x = -1 rows repeat the
/// x = 1 rows with the (-1,.) columns in place of the (1,.) columns.
const std::vector<std::string>& b2_labels();
Matrix<Cyclotomic> b2_matrix();
std::vector<Cyclotomic> b2_transform(const std::vector<Cyclotomic>& phi);

/// "Z2", "S3", "Z2xZ2", "Z3", "1", or a multiplication-table text.
FiniteGroup curated_group(const std::string& name);

}  // namespace uac
