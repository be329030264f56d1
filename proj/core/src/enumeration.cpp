#include "corequot/enumeration.hpp"

#include "corequot/detail/check.hpp"
#include "corequot/special_classes.hpp"

namespace corequot {

using detail::require;

PartitionStream::PartitionStream(long long n, PartitionClass cls, long long t)
    : n_(n), cls_(cls), t_(t) {
    require(n >= 0, "n must be nonnegative");
    if (cls == PartitionClass::t_core)
        require(t >= 1, "t-core filter needs a positive t");
}

bool PartitionStream::advance() {
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        if (n_ > 0)
            current_.assign(1, n_);
        return true;  // (n), or the empty partition when n == 0
    }
    // Decreasing lexicographic successor: cash in the trailing 1s plus one
    // unit from the last part > 1, then refill greedily.
    long long rest = 0;
    while (!current_.empty() && current_.back() == 1) {
        current_.pop_back();
        rest += 1;
    }
    if (current_.empty()) {
        done_ = true;
        return false;
    }
    current_.back() -= 1;
    rest += 1;
    const long long cap = current_.back();
    while (rest > cap) {
        current_.push_back(cap);
        rest -= cap;
    }
    if (rest > 0)
        current_.push_back(rest);
    return true;
}

bool PartitionStream::matches(const Partition& p) const {
    switch (cls_) {
        case PartitionClass::all:
            return true;
        case PartitionClass::t_core:
            return is_t_core_bruteforce(p, t_);
        case PartitionClass::self_conjugate:
            return is_self_conjugate(p);
        case PartitionClass::doubled_distinct:
            return is_doubled_distinct(p);
        case PartitionClass::distinct:
            for (int i = 1; i < p.length(); ++i)
                if (p.part(i) == p.part(i + 1))
                    return false;
            return true;
    }
    return false;
}

std::optional<Partition> PartitionStream::next() {
    while (advance()) {
        Partition p(current_);
        if (matches(p))
            return p;
    }
    return std::nullopt;
}

std::vector<Partition> PartitionStream::drain() {
    std::vector<Partition> out;
    while (auto p = next())
        out.push_back(std::move(*p));
    return out;
}

namespace {

long long count_stream(PartitionStream stream) {
    long long count = 0;
    while (stream.next())
        ++count;
    return count;
}

}  // namespace

long long count_partitions(long long n) {
    return count_stream(PartitionStream(n));
}

long long count_t_cores(long long n, long long t) {
    return count_stream(PartitionStream(n, PartitionClass::t_core, t));
}

long long count_self_conjugate(long long n) {
    return count_stream(PartitionStream(n, PartitionClass::self_conjugate));
}

long long count_doubled_distinct(long long n) {
    return count_stream(PartitionStream(n, PartitionClass::doubled_distinct));
}

long long count_distinct(long long n) {
    return count_stream(PartitionStream(n, PartitionClass::distinct));
}

}  // namespace corequot
