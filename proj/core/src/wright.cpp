#include "corequot/wright.hpp"

#include <algorithm>
#include <numeric>

#include "corequot/detail/check.hpp"

namespace corequot {

using detail::ensure;
using detail::require;

namespace {

void require_row(const std::vector<long long>& row, const char* what) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        require(row[i] >= 0, std::string(what) + " row entries must be nonnegative");
        require(i == 0 || row[i - 1] > row[i],
                std::string(what) + " row must be strictly decreasing");
    }
}

// Conjugate of a weakly decreasing sequence that may contain zeros.
std::vector<long long> conjugate_with_zeros(const std::vector<long long>& nu) {
    std::vector<long long> out;
    if (nu.empty() || nu.front() == 0)
        return out;
    long long cols = static_cast<long long>(nu.size());
    for (long long r = 1; r <= nu.front(); ++r) {
        while (cols > 0 && nu[static_cast<std::size_t>(cols) - 1] < r)
            --cols;
        out.push_back(cols);
    }
    return out;
}

}  // namespace

TwoRowedArray::TwoRowedArray(std::vector<long long> top_row, std::vector<long long> bottom_row)
    : top(std::move(top_row)), bottom(std::move(bottom_row)) {
    require_row(top, "array top");
    require_row(bottom, "array bottom");
}

long long array_weight(const TwoRowedArray& a) {
    return std::accumulate(a.top.begin(), a.top.end(), 0LL) +
           std::accumulate(a.bottom.begin(), a.bottom.end(), 0LL) + a.top_length();
}

long long staircase_size(long long offset) {
    return offset >= 0 ? offset * (offset + 1) / 2 : (-offset) * (-offset - 1) / 2;
}

WrightImage wright_forward(const TwoRowedArray& a0) {
    TwoRowedArray a(a0.top, a0.bottom);  // rejects malformed rows
    const long long u = a.top_length();
    const long long v = a.bottom_length();
    const long long d = u - v;

    std::vector<long long> parts;
    for (long long i = 1; i <= u; ++i)
        parts.push_back(a.top[static_cast<std::size_t>(i) - 1] + i - d);
    std::vector<long long> nu;
    for (long long j = 1; j <= v; ++j)
        nu.push_back(a.bottom[static_cast<std::size_t>(j) - 1] - v + j);
    for (long long tail : conjugate_with_zeros(nu))
        parts.push_back(tail);

    WrightImage image{d, Partition(std::move(parts))};
    ensure(staircase_size(d) + image.mu.size() == array_weight(a),
           "Wright forward map lost weight");
    return image;
}

TwoRowedArray wright_backward(long long offset, const Partition& mu) {
    // mu_i + offset - i is strictly decreasing in i, so u is the count of
    // indices where it stays nonnegative (mu padded with zeros).
    long long u = 0;
    while (mu.part(static_cast<int>(u) + 1) + offset - (u + 1) >= 0)
        ++u;
    const long long v = u - offset;
    ensure(v >= 0, "bottom row length cannot be negative");

    std::vector<long long> top;
    for (long long i = 1; i <= u; ++i)
        top.push_back(mu.part(static_cast<int>(i)) + offset - i);

    std::vector<long long> tail;
    for (int i = static_cast<int>(u) + 1; i <= mu.length(); ++i)
        tail.push_back(mu.part(i));
    std::vector<long long> nu = conjugate_with_zeros(tail);
    ensure(static_cast<long long>(nu.size()) <= v, "conjugated tail exceeds bottom row length");
    nu.resize(static_cast<std::size_t>(v), 0);

    std::vector<long long> bottom;
    for (long long j = 1; j <= v; ++j)
        bottom.push_back(nu[static_cast<std::size_t>(j) - 1] + v - j);

    // The construction forces both rows strictly decreasing and nonnegative.
    TwoRowedArray a(std::move(top), std::move(bottom));
    ensure(array_weight(a) == staircase_size(offset) + mu.size(),
           "Wright backward map lost weight");
    return a;
}

}  // namespace corequot
