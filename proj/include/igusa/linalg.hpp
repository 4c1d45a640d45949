#ifndef IGUSA_LINALG_HPP
#define IGUSA_LINALG_HPP

#include <optional>
#include <vector>

#include "igusa/numeric.hpp"

namespace igusa {

using QMatrix = std::vector<std::vector<Rational>>;

int rank_of(QMatrix m);

int rank_of_rows(const std::vector<IVec>& rows);

// Unique solution x of A x = b for A with full column rank (columns given as
// `cols`); nullopt when the system is inconsistent. Throws if the columns are
// linearly dependent.
std::optional<std::vector<Rational>> solve_full_column_rank(
    const std::vector<IVec>& cols, const std::vector<Rational>& b);

// One-dimensional rational nullspace of the span of `rows`, scaled to a
// primitive integer vector with positive leading nonzero entry; nullopt when
// the nullspace dimension is not exactly 1.
std::optional<IVec> nullspace_primitive(const std::vector<IVec>& rows, int n);

Integer determinant(const std::vector<IVec>& rows);

// gcd of the absolute values of all maximal (r x r) minors of the r x n
// matrix whose rows are `rows`; this is the index of the generated sublattice
// inside the lattice of its saturation. Zero when the rows are dependent.
Integer gcd_of_maximal_minors(const std::vector<IVec>& rows);

}  // namespace igusa

#endif
