#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "covertool/field.hpp"

namespace covertool {

// Sparse integer column: (row, value) pairs with strictly increasing rows and
// nonzero values.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// Exact rank of an integer matrix over `field`. Over the rationals the
// reduction is fraction-free: 64-bit arithmetic with a switch to arbitrary
// precision when an intermediate would overflow.
std::size_t matrix_rank(const std::vector<SparseColumn>& columns,
                        const Field& field);

}  // namespace covertool
