#pragma once

#include <compare>
#include <initializer_list>
#include <utility>
#include <vector>

namespace corequot {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (the partition of 0) is the default value.
/// Constructors accept trailing zeros and drop them, so equal partitions
/// are structurally equal; anything else malformed is rejected.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);
    Partition(std::initializer_list<long long> parts);

    const std::vector<long long>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// |lambda|, the total number of boxes.
    long long size() const noexcept;

    /// lambda_i with 1-based i; 0 past the last row.
    long long part(int i) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<long long> parts_;
};

/// Transpose of the Young diagram: result_j = #{i : lambda_i >= j}.
Partition conjugate(const Partition& p);

/// Side of the Durfee square: the largest s with lambda_s >= s.
int durfee(const Partition& p);

/// Hook length of box (i,j), 1-based: (lambda_i - i) + (lambda'_j - j) + 1.
/// The box must lie in the diagram.
long long hook_length(const Partition& p, int i, int j);

/// All hook lengths, sorted in decreasing order. One entry per box.
std::vector<long long> hook_multiset(const Partition& p);

/// True iff no hook length is divisible by t. Exhaustive check over all boxes.
bool is_t_core_bruteforce(const Partition& p, long long t);

/// #{(i,j) : hook == t}.
long long count_hooks_of_length(const Partition& p, long long t);

/// The boxes of hook length exactly t, in row-major (topmost, then leftmost) order.
std::vector<std::pair<int, int>> hooks_of_length(const Partition& p, long long t);

/// Remove the rim hook anchored at box (i,j): the border strip running from
/// the end of row i to the foot of column j. Removes hook_length(p,i,j) boxes.
Partition remove_rim_hook(const Partition& p, int i, int j);

/// Rim-hook oracle for the t-core: repeatedly removes the rim hook anchored
/// at the first box of hook length t until none remains. The result has no
/// hook divisible by t, and is independent of the removal order.
Partition strip_t_core(const Partition& p, long long t);

/// Position of a box relative to the Durfee square, following the rim-hook
/// shape of its hook.
enum class HookCase {
    arm_leg,  // i, j <= s: the hook spans both an arm and a leg
    arm,      // i <= s < j: the rim hook consists of horizontal strips
    leg,      // j <= s < i: vertical strips
};

struct HookClassification {
    int row = 0;
    int col = 0;
    HookCase kind = HookCase::arm_leg;
    long long length = 0;

    friend bool operator==(const HookClassification&, const HookClassification&) = default;
};

HookClassification classify_hook(const Partition& p, int i, int j);

}  // namespace corequot
