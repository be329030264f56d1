#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corequot/partition.hpp"

namespace corequot {

/// A partition into strictly decreasing (hence distinct) positive parts.
class DistinctPartition {
public:
    DistinctPartition() = default;
    explicit DistinctPartition(Partition p);
    DistinctPartition(std::initializer_list<long long> parts);

    const Partition& partition() const noexcept { return p_; }

    friend bool operator==(const DistinctPartition&, const DistinctPartition&) = default;

private:
    Partition p_;
};

/// lambda equals its conjugate; equivalently the symbol rows coincide.
/// Both formulations are evaluated and must agree.
bool is_self_conjugate(const Partition& p);

/// The partition whose Frobenius symbol is (delta_i | delta_i - 1); its size
/// is twice the size of delta.
Partition double_distinct(const DistinctPartition& delta);

/// True iff the symbol satisfies b_i = a_i - 1 in every column.
bool is_doubled_distinct(const Partition& p);

/// Outcome of a structural verification, one named boolean per condition.
struct ClassReport {
    Partition input;
    long long modulus = 1;
    std::vector<std::pair<std::string, bool>> checks;
    bool pass = true;
};

/// For self-conjugate input: the t-core is self-conjugate and the quotient
/// components pair up under conjugation as quotient_j' = quotient_{t-j-1}.
ClassReport verify_sc_decomposition(const Partition& p, long long t);

/// For doubled distinct input: the t-core and quotient_0 are doubled
/// distinct, quotient_j' = quotient_{t-j} for j = 1..t-1, and every symbol
/// column matches the color pattern (q_0 | (q-1)_0) or (q_r | q_{t-r}).
ClassReport verify_dd_decomposition(const Partition& p, long long t);

}  // namespace corequot
