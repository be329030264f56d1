#pragma once

#include <vector>

#include "corequot/partition.hpp"

namespace corequot {

/// Two independent strictly decreasing rows of nonnegative integers; the
/// rows may have different lengths and either may be empty.
struct TwoRowedArray {
    std::vector<long long> top;
    std::vector<long long> bottom;

    TwoRowedArray() = default;
    TwoRowedArray(std::vector<long long> top_row, std::vector<long long> bottom_row);

    int top_length() const noexcept { return static_cast<int>(top.size()); }
    int bottom_length() const noexcept { return static_cast<int>(bottom.size()); }

    friend bool operator==(const TwoRowedArray&, const TwoRowedArray&) = default;
};

/// sum(top) + sum(bottom) + top length: the dot count of the diagonal diagram.
long long array_weight(const TwoRowedArray& a);

/// Image of an array under Wright's map: a staircase recorded by its offset
/// d = u - v together with an ordinary partition. The staircase has size
/// d(d+1)/2 when d >= 0 and (-d)(-d-1)/2 otherwise.
struct WrightImage {
    long long offset = 0;
    Partition mu;

    friend bool operator==(const WrightImage&, const WrightImage&) = default;
};

/// Size of the staircase encoded by an offset.
long long staircase_size(long long offset);

/// Weight-preserving map from arrays to (staircase, partition) pairs:
/// mu_i = a_i + i - (u - v) for i <= u, and the remaining parts are the
/// conjugate of nu_j = b_j - v + j (zero parts permitted in nu).
WrightImage wright_forward(const TwoRowedArray& a);

/// Inverse construction. With mu padded by zeros: u = #{i : mu_i + d - i >= 0},
/// v = u - d, a_i = mu_i + d - i, and b_j = nu_j + v - j where nu is the
/// conjugate of (mu_{u+1}, mu_{u+2}, ...) padded with zeros to exactly v parts.
/// Every (d, mu) pair is in the image.
TwoRowedArray wright_backward(long long offset, const Partition& mu);

}  // namespace corequot
