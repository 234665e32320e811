#include <doctest.h>

#include <random>

#include "covertool/error.hpp"
#include "covertool/field.hpp"
#include "covertool/linear_algebra.hpp"
#include "oracles.hpp"

using namespace covertool;

namespace {

std::vector<SparseColumn> columns_of(const std::vector<std::vector<long long>>& rows) {
  std::vector<SparseColumn> cols(rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c]) cols[c].emplace_back(static_cast<std::uint32_t>(r), rows[r][c]);
    }
  }
  return cols;
}

}  // namespace

TEST_CASE("fields") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("f7").characteristic() == 7);
  CHECK(Field::prime(2147483647).token() == "f2147483647");
  CHECK_THROWS_AS(Field::parse("f4"), InvalidArgument);
  CHECK_THROWS_AS(Field::parse("r"), InvalidArgument);
  CHECK_THROWS_AS(Field::prime(1), InvalidArgument);
}

TEST_CASE("rank examples") {
  const Field q = Field::rationals();
  CHECK(matrix_rank({}, q) == 0);
  CHECK(matrix_rank(columns_of({{1, 2}, {2, 4}}), q) == 1);
  CHECK(matrix_rank(columns_of({{1, 1}, {1, -1}}), q) == 2);
  CHECK(matrix_rank(columns_of({{1, 1}, {1, -1}}), Field::prime(2)) == 1);
  CHECK(matrix_rank(columns_of({{3, 0}, {0, 3}}), Field::prime(3)) == 0);
  CHECK_THROWS_AS(matrix_rank({{{1, 1}, {0, 1}}}, q), InvalidArgument);
  CHECK_THROWS_AS(matrix_rank({{{0, 0}}}, q), InvalidArgument);
}

TEST_CASE("rank survives 64-bit overflow") {
  const long long big = 3037000499LL;  // big^2 just fits in int64
  const auto cols = columns_of({{big, big + 1, 1}, {big + 2, big, 1}, {big, big, 2}});
  CHECK(matrix_rank(cols, Field::rationals()) ==
        oracle::rational_rank({{big, big + 1, 1}, {big + 2, big, 1}, {big, big, 2}}));
}

TEST_CASE("rank agrees with dense rational elimination") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 7, c = 1 + (trial / 7) % 7;
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng) * (trial % 3 == 0 ? 1000003 : 1);
    REQUIRE(matrix_rank(columns_of(rows), Field::rationals()) ==
            oracle::rational_rank(rows));
  }
}
