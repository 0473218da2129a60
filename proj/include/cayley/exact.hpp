#pragma once

#include <vector>

namespace cayley {

/// Rank over the rationals of an integer matrix, given row by row.
/// Plain Gaussian elimination on exact rationals; meant for the few hundred
/// rows that cohomology counts need.
int rational_rank(const std::vector<std::vector<long long>>& rows);

}  // namespace cayley
