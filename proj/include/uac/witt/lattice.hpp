#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uac/core/linalg.hpp"

namespace uac {

using IVec = std::vector<std::int64_t>;

/// Submodule of (Z/p^e)^N (Z/p^e = W_e(F_p)). Stored in canonical form:
/// N upper-triangular rows, row j has pivot p^a_j (a_j = e means the zero row),
/// entries right of a pivot reduced modulo the later pivots. Equivalently the
/// Hermite basis of the lattice M with p^e Z^N in M in Z^N.
class LatticeSubmodule {
 public:
  LatticeSubmodule(int p, int e, int n, const std::vector<IVec>& generators);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int rank() const noexcept { return n_; }
  std::int64_t modulus() const noexcept { return mod_; }
  const std::vector<IVec>& rows() const noexcept { return rows_; }
  const std::vector<int>& pivots() const noexcept { return piv_; }
  /// Z = sum Z/p^k_i, from an independent Smith elimination of the generators
  const std::vector<int>& smith_exponents() const noexcept { return smith_; }
  /// d(Z) = sum k_i
  int d() const;
  /// d of the quotient (Z/p^e)^N / Z, read off the Hermite pivots
  int quotient_d() const;
  bool contains(const IVec& v) const;
  /// Lattice basis of M over Z (rows with a_j = e become p^e e_j).
  QMatrix lattice_basis() const;

  friend bool operator==(const LatticeSubmodule& a, const LatticeSubmodule& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const LatticeSubmodule& a, const LatticeSubmodule& b) { return a.rows_ < b.rows_; }
  std::string to_string() const;

 private:
  int p_, e_, n_;
  std::int64_t mod_;
  std::vector<IVec> rows_;
  std::vector<int> piv_;
  std::vector<int> smith_;
};

/// Lie algebra over Z_p with a Z-basis of L0: structure constants and Killing Gram.
struct LieLatticeDatum {
  std::string name;
  int p = 0;
  int n = 0;                                    // rank N
  std::vector<std::vector<IVec>> bracket;       // [b_i, b_j] coordinates
  std::vector<IVec> gram;

  /// sl2 with basis e, h, f; throws kPrecondition when the Killing form degenerates mod p.
  static LieLatticeDatum sl2(int p);
  IVec lie(const IVec& u, const IVec& v) const;
  std::int64_t pair(const IVec& u, const IVec& v) const;
  std::int64_t trilinear(const IVec& u, const IVec& v, const IVec& w) const { return pair(lie(u, v), w); }
};

/// Ambient V_n = p^-n L0 / p^n L0 in coordinates u = p^n x, i.e. (Z/p^2n)^N.
/// L^# = {x : (x, L) in o}, computed from a rational dual basis.
LatticeSubmodule sharp(const LieLatticeDatum& g, const LatticeSubmodule& z);
/// d(Z) = nN and (Z, Z)_n = 0
bool is_self_dual_isotropic(const LieLatticeDatum& g, int n, const LatticeSubmodule& z);
/// (Z1, Z1, Z1)_n = 0 with Z1 the preimage of Z in V'_n = (Z/p^3n)^N
bool is_lie_closed(const LieLatticeDatum& g, int n, const LatticeSubmodule& z);
/// [L, L] in L for L = p^-n M, tested with exact rationals
bool lattice_lie_closed(const LieLatticeDatum& g, int n, const LatticeSubmodule& z);

/// Every submodule of (Z/p^e)^N in canonical order (by pivot type, then rows);
/// d_filter >= 0 keeps only d(Z) = d_filter. Throws kBudget past budget candidates.
std::vector<LatticeSubmodule> enumerate_submodules(int p, int e, int n, int d_filter = -1, bool parallel = true,
                                                   std::int64_t budget = 20'000'000);

struct XnReport {
  int p = 0, n = 0;
  std::vector<LatticeSubmodule> e_prime;   // E': Lagrangian in V_n
  std::vector<LatticeSubmodule> e_prime0;  // E'_0: also Lie closed (trilinear test)
  std::vector<LatticeSubmodule> direct;    // L with L# = L and [L,L] in L, enumerated as lattices
  std::vector<LatticeSubmodule> self_dual; // L with L# = L
  std::int64_t candidates = 0;
  bool bijection_e = false;   // E = E' element-wise
  bool bijection_x = false;   // X_n = E'_0 element-wise
  bool duality = false;       // d(Z) + d(V_n/Z) = 2nN for every enumerated Z
};
XnReport enumerate_X_n(const LieLatticeDatum& g, int n, bool parallel = true, std::int64_t budget = 20'000'000);

/// Borel subalgebras of L/pL over F_q, by brute force over 2-dim subalgebras.
/// L = p^-n M must be Lie closed with nondegenerate reduced Killing form.
int borel_fiber_count(const LieLatticeDatum& g, int n, const LatticeSubmodule& z, int q);

}  // namespace uac
