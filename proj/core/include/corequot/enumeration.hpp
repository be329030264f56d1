#pragma once

#include <optional>
#include <vector>

#include "corequot/partition.hpp"

namespace corequot {

enum class PartitionClass {
    all,
    t_core,
    self_conjugate,
    doubled_distinct,
    distinct,
};

/// Single-pass generator over the partitions of n, optionally filtered to a
/// class. Partitions come out in lexicographically decreasing order starting
/// from (n), so two runs yield identical sequences.
class PartitionStream {
public:
    explicit PartitionStream(long long n, PartitionClass cls = PartitionClass::all,
                             long long t = 0);

    std::optional<Partition> next();

    /// Collect everything the stream has not yielded yet.
    std::vector<Partition> drain();

private:
    bool advance();
    bool matches(const Partition& p) const;

    long long n_;
    PartitionClass cls_;
    long long t_;
    std::vector<long long> current_;
    bool started_ = false;
    bool done_ = false;
};

long long count_partitions(long long n);
long long count_t_cores(long long n, long long t);
long long count_self_conjugate(long long n);
long long count_doubled_distinct(long long n);
long long count_distinct(long long n);

}  // namespace corequot
