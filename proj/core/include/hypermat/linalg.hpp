#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace hypermat {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row, in order; zero rows are removed.
std::vector<std::size_t> rref(RationalMatrix& rows, std::size_t columns);

/// Rank over the rationals. The input is left untouched.
std::size_t rank(RationalMatrix rows);

}  // namespace hypermat
