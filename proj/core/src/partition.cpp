#include "corequot/partition.hpp"

#include <algorithm>
#include <numeric>

#include "corequot/detail/check.hpp"

namespace corequot {

using detail::ensure;
using detail::require;

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] > 0, "partition parts must be positive");
        require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<long long> parts)
    : Partition(std::vector<long long>(parts)) {}

long long Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

long long Partition::part(int i) const noexcept {
    if (i < 1 || i > length())
        return 0;
    return parts_[static_cast<std::size_t>(i) - 1];
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return {};
    std::vector<long long> cols;
    cols.reserve(static_cast<std::size_t>(p.parts().front()));
    long long rows = p.length();
    for (long long j = 1; j <= p.parts().front(); ++j) {
        while (rows > 0 && p.parts()[static_cast<std::size_t>(rows) - 1] < j)
            --rows;
        cols.push_back(rows);
    }
    return Partition(std::move(cols));
}

int durfee(const Partition& p) {
    int s = 0;
    while (p.part(s + 1) >= s + 1)
        ++s;
    return s;
}

long long hook_length(const Partition& p, int i, int j) {
    require(i >= 1 && j >= 1 && j <= p.part(i), "box outside the Young diagram");
    long long col = 0;  // lambda'_j
    for (long long row : p.parts())
        if (row >= j)
            ++col;
    return (p.part(i) - i) + (col - j) + 1;
}

std::vector<long long> hook_multiset(const Partition& p) {
    const Partition conj = conjugate(p);
    std::vector<long long> hooks;
    hooks.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            hooks.push_back((p.part(i) - i) + (conj.part(j) - j) + 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return hooks;
}

bool is_t_core_bruteforce(const Partition& p, long long t) {
    require(t >= 1, "modulus t must be positive");
    const Partition conj = conjugate(p);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (((p.part(i) - i) + (conj.part(j) - j) + 1) % t == 0)
                return false;
    return true;
}

long long count_hooks_of_length(const Partition& p, long long t) {
    require(t >= 1, "hook length must be positive");
    long long count = 0;
    const Partition conj = conjugate(p);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if ((p.part(i) - i) + (conj.part(j) - j) + 1 == t)
                ++count;
    return count;
}

std::vector<std::pair<int, int>> hooks_of_length(const Partition& p, long long t) {
    require(t >= 1, "hook length must be positive");
    std::vector<std::pair<int, int>> boxes;
    const Partition conj = conjugate(p);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if ((p.part(i) - i) + (conj.part(j) - j) + 1 == t)
                boxes.emplace_back(i, j);
    return boxes;
}

Partition remove_rim_hook(const Partition& p, int i, int j) {
    require(i >= 1 && j >= 1 && j <= p.part(i), "box outside the Young diagram");
    const Partition conj = conjugate(p);
    const int ell = static_cast<int>(conj.part(j));  // foot row of column j
    // Rows i..ell-1 shift up by one box less; row ell is cut at column j-1.
    std::vector<long long> parts = p.parts();
    for (int r = i; r < ell; ++r)
        parts[static_cast<std::size_t>(r) - 1] = p.part(r + 1) - 1;
    parts[static_cast<std::size_t>(ell) - 1] = j - 1;
    return Partition(std::move(parts));
}

Partition strip_t_core(const Partition& p, long long t) {
    require(t >= 1, "modulus t must be positive");
    Partition cur = p;
    for (;;) {
        auto boxes = hooks_of_length(cur, t);
        if (boxes.empty())
            break;
        cur = remove_rim_hook(cur, boxes.front().first, boxes.front().second);
    }
    ensure(is_t_core_bruteforce(cur, t), "strip_t_core left a hook divisible by t");
    return cur;
}

HookClassification classify_hook(const Partition& p, int i, int j) {
    const long long len = hook_length(p, i, j);
    const int s = durfee(p);
    HookCase kind = HookCase::arm_leg;
    if (i <= s && j > s)
        kind = HookCase::arm;
    else if (j <= s && i > s)
        kind = HookCase::leg;
    else
        ensure(i <= s && j <= s, "box unexpectedly outside all three hook cases");
    return HookClassification{i, j, kind, len};
}

}  // namespace corequot
