#include "covertool/linear_algebra.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "covertool/error.hpp"

namespace covertool {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

std::int64_t gcd_of(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() ||
      b == std::numeric_limits<std::int64_t>::min()) {
    throw Overflow{};
  }
  return std::gcd(a, b);
}

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt gcd_of(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

template <typename T>
using Column = std::vector<std::pair<std::uint32_t, T>>;

// c <- a*c - b*o, then strip the content.
template <typename T>
void eliminate(Column<T>& c, const Column<T>& o) {
  T a = o.back().second;
  T b = c.back().second;
  const T g = gcd_of(a, b);
  a /= g;
  b /= g;
  Column<T> out;
  out.reserve(c.size() + o.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < c.size() || j < o.size()) {
    if (j == o.size() || (i < c.size() && c[i].first < o[j].first)) {
      out.emplace_back(c[i].first, mul(a, c[i].second));
      ++i;
    } else if (i == c.size() || o[j].first < c[i].first) {
      out.emplace_back(o[j].first, sub(T(0), mul(b, o[j].second)));
      ++j;
    } else {
      T v = sub(mul(a, c[i].second), mul(b, o[j].second));
      if (v != 0) out.emplace_back(c[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  T content = 0;
  for (const auto& [row, v] : out) {
    content = gcd_of(content, v);
    if (content == 1) break;
  }
  if (content > 1) {
    for (auto& [row, v] : out) v /= content;
  }
  c = std::move(out);
}

template <typename T>
std::size_t rank_integer(const std::vector<SparseColumn>& input,
                         std::size_t nrows) {
  std::vector<std::int64_t> pivot_of(nrows, -1);
  std::vector<Column<T>> reduced;
  for (const auto& src : input) {
    Column<T> c;
    c.reserve(src.size());
    for (const auto& [row, v] : src) c.emplace_back(row, T(v));
    while (!c.empty()) {
      const std::int64_t p = pivot_of[c.back().first];
      if (p < 0) {
        pivot_of[c.back().first] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(std::move(c));
        break;
      }
      eliminate(c, reduced[static_cast<std::size_t>(p)]);
    }
  }
  return reduced.size();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t out = 1;
  base %= p;
  while (exp) {
    if (exp & 1U) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

std::size_t rank_mod_p(const std::vector<SparseColumn>& input,
                       std::size_t nrows, std::uint64_t p) {
  using Col = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<std::int64_t> pivot_of(nrows, -1);
  std::vector<Col> reduced;
  const auto reduce_value = [p](std::int64_t v) {
    const auto pp = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((v % pp) + pp) % pp);
  };
  for (const auto& src : input) {
    Col c;
    for (const auto& [row, v] : src) {
      if (auto r = reduce_value(v)) c.emplace_back(row, r);
    }
    while (!c.empty()) {
      const std::int64_t piv = pivot_of[c.back().first];
      if (piv < 0) {
        // Normalize so the pivot entry is 1.
        const std::uint64_t inv = mod_pow(c.back().second, p - 2, p);
        for (auto& [row, v] : c) v = v * inv % p;
        pivot_of[c.back().first] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(std::move(c));
        break;
      }
      const Col& o = reduced[static_cast<std::size_t>(piv)];
      const std::uint64_t b = c.back().second;
      Col out;
      out.reserve(c.size() + o.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < c.size() || j < o.size()) {
        if (j == o.size() || (i < c.size() && c[i].first < o[j].first)) {
          out.push_back(c[i++]);
        } else if (i == c.size() || o[j].first < c[i].first) {
          out.emplace_back(o[j].first, (p - b * o[j].second % p) % p);
          ++j;
        } else {
          const std::uint64_t v = (c[i].second + p - b * o[j].second % p) % p;
          if (v) out.emplace_back(c[i].first, v);
          ++i;
          ++j;
        }
      }
      c = std::move(out);
    }
  }
  return reduced.size();
}

}  // namespace

std::size_t matrix_rank(const std::vector<SparseColumn>& columns,
                        const Field& field) {
  std::size_t nrows = 0;
  for (const auto& c : columns) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].second == 0) throw InvalidArgument("explicit zero in column");
      if (i && c[i - 1].first >= c[i].first) {
        throw InvalidArgument("column rows not strictly increasing");
      }
    }
    if (!c.empty()) nrows = std::max<std::size_t>(nrows, c.back().first + 1);
  }
  if (!field.is_rational()) {
    return rank_mod_p(columns, nrows, field.characteristic());
  }
  try {
    return rank_integer<std::int64_t>(columns, nrows);
  } catch (const Overflow&) {
    return rank_integer<BigInt>(columns, nrows);
  }
}

}  // namespace covertool
