#pragma once

#include <vector>

#include "corequot/frobenius.hpp"
#include "corequot/partition.hpp"
#include "corequot/wright.hpp"

namespace corequot {

/// The image of a partition under the core/quotient bijection at modulus t:
/// a t-core, the t ordinary partitions of the quotient, and the per-color
/// surpluses w_j. The charvec always sums to zero and is determined by the
/// core alone; it is carried here so callers can cross-check both routes.
struct Decomposition {
    long long modulus = 1;
    Partition core;
    std::vector<Partition> quotient;  // lambda_(0), ..., lambda_(t-1)
    std::vector<long long> charvec;   // w_j = u_j - v_j

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Group the columns of a colored symbol by color. Array j carries the
/// values of the color-j top entries and the values of the color-j bottom
/// entries, each in strictly decreasing value order.
std::vector<TwoRowedArray> split_by_color(const ColoredFrobeniusSymbol& c);

/// Per-color surpluses read off a t-core alone: +count of color-j top
/// entries, -count of color-j bottom entries of its colored symbol.
std::vector<long long> core_char_vector(const Partition& core, long long t);

/// Decompose a partition into its t-core, t-quotient and characteristic
/// vector by splitting the colored symbol and applying Wright's map per color.
Decomposition decompose(const Partition& p, long long t);

/// Inverse of decompose. The core must be a t-core and the quotient must
/// have exactly t entries; both are validated.
Partition compose(const Partition& core, const std::vector<Partition>& quotient, long long t);

/// The characteristic vector of a partition; entries sum to zero.
std::vector<long long> char_vector(const Partition& p, long long t);

/// Total number of hooks of length 1 across the quotient components.
long long quotient_hook1_count(const Decomposition& d);

}  // namespace corequot
