#pragma once

#include <vector>

#include "corequot/partition.hpp"

namespace corequot {

/// Frobenius symbol: two equal-length rows of strictly decreasing
/// nonnegative integers. Column i of the symbol of a partition reads
/// (lambda_i - i) over (lambda'_i - i) across the Durfee range.
struct FrobeniusSymbol {
    std::vector<long long> top;
    std::vector<long long> bottom;

    FrobeniusSymbol() = default;
    FrobeniusSymbol(std::vector<long long> top_row, std::vector<long long> bottom_row);

    int columns() const noexcept { return static_cast<int>(top.size()); }
    /// sum(a_i + b_i + 1); equals the size of the encoded partition.
    long long weight() const noexcept;

    friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;
};

/// A nonnegative integer carrying one of `modulus` colors.
struct ColoredInteger {
    long long value = 0;
    long long color = 0;  // 0 <= color < modulus
    long long modulus = 1;

    friend bool operator==(const ColoredInteger&, const ColoredInteger&) = default;
};

/// Strict total order on colored integers: compare values, break ties by color.
bool colored_less(const ColoredInteger& x, const ColoredInteger& y);

/// a = t*q + r for a top entry (value q, color r).
long long decode_top(const ColoredInteger& c);
/// b = t*q + (t - r - 1) for a bottom entry (value q, color r).
long long decode_bottom(const ColoredInteger& c);

/// Colored re-encoding of a Frobenius symbol modulo t. Columns stay aligned
/// with the source symbol, so the decoded top values t*q+r and the decoded
/// bottom values t*q+(t-r-1) are both strictly decreasing left to right.
struct ColoredFrobeniusSymbol {
    std::vector<ColoredInteger> top;
    std::vector<ColoredInteger> bottom;
    long long modulus = 1;

    ColoredFrobeniusSymbol() = default;
    ColoredFrobeniusSymbol(std::vector<ColoredInteger> top_row,
                           std::vector<ColoredInteger> bottom_row, long long modulus);

    int columns() const noexcept { return static_cast<int>(top.size()); }

    friend bool operator==(const ColoredFrobeniusSymbol&, const ColoredFrobeniusSymbol&) = default;
};

/// a_i = lambda_i - i, b_i = lambda'_i - i over the Durfee square.
FrobeniusSymbol to_frobenius(const Partition& p);

/// Inverse of to_frobenius; the symbol determines the partition uniquely.
Partition from_frobenius(const FrobeniusSymbol& f);

/// Euclidean split of each column: a_i = t*q_i + r_i and b_i = t*q'_i + (t - r'_i - 1).
ColoredFrobeniusSymbol to_colored(const FrobeniusSymbol& f, long long t);

/// Decode every column back to its plain values.
FrobeniusSymbol from_colored(const ColoredFrobeniusSymbol& c);

/// t-core test on the symbol: no column weight a_i + b_j + 1 divisible by t,
/// and each row is closed downward under subtracting t.
bool is_t_core_frobenius(const FrobeniusSymbol& f, long long t);

/// t-core test on the colored symbol: no color occurs in both rows, and the
/// values of each color present in a row form an initial segment m-1,...,1,0.
bool is_t_core_colored(const ColoredFrobeniusSymbol& c);

/// Number of t-colored Frobenius partitions of n: two equal-length rows of
/// colored nonnegative integers, each strictly decreasing in the colored
/// order, with numerical values plus column count summing to n. Counted by
/// exhaustive generation of the rows.
long long count_colored_frobenius(long long n, long long t);

}  // namespace corequot
