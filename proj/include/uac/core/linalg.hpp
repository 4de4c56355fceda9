#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uac/core/matrix.hpp"
#include "uac/core/rational.hpp"

namespace uac {

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<std::int64_t>;

QMatrix to_rational(const ZMatrix& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
/// Basis of {x : m x = 0}, as columns of the returned matrix.
QMatrix nullspace(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
/// Some x with m x = b, or nullopt.
std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b);
/// Basis of the row space (rows of the result).
QMatrix row_space(const QMatrix& m);
/// True if every row of sub lies in the row span of m.
bool row_span_contains(const QMatrix& m, const QMatrix& sub);

/// Row Hermite normal form over Z of the lattice spanned by the rows;
/// zero rows dropped, pivots positive, entries above a pivot reduced to [0, pivot).
std::vector<std::vector<BigInt>> hermite_rows(std::vector<std::vector<BigInt>> rows);

}  // namespace uac
