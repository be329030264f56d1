#include "corequot/frobenius.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

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

}  // namespace

FrobeniusSymbol::FrobeniusSymbol(std::vector<long long> top_row, std::vector<long long> bottom_row)
    : top(std::move(top_row)), bottom(std::move(bottom_row)) {
    require(top.size() == bottom.size(), "Frobenius rows must have equal length");
    require_row(top, "Frobenius top");
    require_row(bottom, "Frobenius bottom");
}

long long FrobeniusSymbol::weight() const noexcept {
    long long w = 0;
    for (int i = 0; i < columns(); ++i)
        w += top[static_cast<std::size_t>(i)] + bottom[static_cast<std::size_t>(i)] + 1;
    return w;
}

bool colored_less(const ColoredInteger& x, const ColoredInteger& y) {
    require(x.modulus == y.modulus, "colored integers must share a modulus");
    return x.value < y.value || (x.value == y.value && x.color < y.color);
}

long long decode_top(const ColoredInteger& c) {
    return c.modulus * c.value + c.color;
}

long long decode_bottom(const ColoredInteger& c) {
    return c.modulus * c.value + (c.modulus - c.color - 1);
}

ColoredFrobeniusSymbol::ColoredFrobeniusSymbol(std::vector<ColoredInteger> top_row,
                                               std::vector<ColoredInteger> bottom_row,
                                               long long modulus_in)
    : top(std::move(top_row)), bottom(std::move(bottom_row)), modulus(modulus_in) {
    require(modulus >= 1, "modulus t must be positive");
    require(top.size() == bottom.size(), "colored Frobenius rows must have equal length");
    auto check_entries = [&](const std::vector<ColoredInteger>& row) {
        for (const ColoredInteger& e : row) {
            require(e.modulus == modulus, "entry modulus differs from symbol modulus");
            require(e.value >= 0, "colored values must be nonnegative");
            require(e.color >= 0 && e.color < modulus, "color out of range");
        }
    };
    check_entries(top);
    check_entries(bottom);
    for (std::size_t i = 1; i < top.size(); ++i) {
        require(decode_top(top[i - 1]) > decode_top(top[i]),
                "decoded top values must be strictly decreasing");
        require(decode_bottom(bottom[i - 1]) > decode_bottom(bottom[i]),
                "decoded bottom values must be strictly decreasing");
    }
}

FrobeniusSymbol to_frobenius(const Partition& p) {
    const int s = durfee(p);
    const Partition conj = conjugate(p);
    std::vector<long long> top, bottom;
    top.reserve(static_cast<std::size_t>(s));
    bottom.reserve(static_cast<std::size_t>(s));
    for (int i = 1; i <= s; ++i) {
        top.push_back(p.part(i) - i);
        bottom.push_back(conj.part(i) - i);
    }
    FrobeniusSymbol f(std::move(top), std::move(bottom));
    ensure(f.weight() == p.size(), "Frobenius weight disagrees with partition size");
    return f;
}

Partition from_frobenius(const FrobeniusSymbol& f) {
    FrobeniusSymbol checked(f.top, f.bottom);  // rejects malformed rows
    const int s = checked.columns();
    std::vector<long long> parts;
    for (int i = 1; i <= s; ++i)
        parts.push_back(checked.top[static_cast<std::size_t>(i) - 1] + i);
    if (s > 0) {
        // Column heights below the Durfee square, weakly decreasing.
        std::vector<long long> below(static_cast<std::size_t>(s));
        for (int j = 1; j <= s; ++j)
            below[static_cast<std::size_t>(j) - 1] =
                checked.bottom[static_cast<std::size_t>(j) - 1] + j - s;
        long long cols = s;
        for (long long r = 1; r <= below[0]; ++r) {
            while (cols > 0 && below[static_cast<std::size_t>(cols) - 1] < r)
                --cols;
            parts.push_back(cols);
        }
    }
    Partition result(std::move(parts));
    ensure(result.size() == checked.weight(), "decoded partition size disagrees with weight");
    return result;
}

ColoredFrobeniusSymbol to_colored(const FrobeniusSymbol& f, long long t) {
    require(t >= 1, "modulus t must be positive");
    std::vector<ColoredInteger> top, bottom;
    top.reserve(f.top.size());
    bottom.reserve(f.bottom.size());
    for (long long a : f.top)
        top.push_back(ColoredInteger{a / t, a % t, t});
    for (long long b : f.bottom)
        bottom.push_back(ColoredInteger{b / t, t - 1 - b % t, t});
    return ColoredFrobeniusSymbol(std::move(top), std::move(bottom), t);
}

FrobeniusSymbol from_colored(const ColoredFrobeniusSymbol& c) {
    ColoredFrobeniusSymbol checked(c.top, c.bottom, c.modulus);
    std::vector<long long> top, bottom;
    top.reserve(checked.top.size());
    bottom.reserve(checked.bottom.size());
    for (const ColoredInteger& e : checked.top)
        top.push_back(decode_top(e));
    for (const ColoredInteger& e : checked.bottom)
        bottom.push_back(decode_bottom(e));
    return FrobeniusSymbol(std::move(top), std::move(bottom));
}

bool is_t_core_frobenius(const FrobeniusSymbol& f, long long t) {
    require(t >= 1, "modulus t must be positive");
    for (long long a : f.top)
        for (long long b : f.bottom)
            if ((a + b + 1) % t == 0)
                return false;
    auto closed_under_minus_t = [t](const std::vector<long long>& row) {
        for (long long x : row)
            if (x >= t && std::find(row.begin(), row.end(), x - t) == row.end())
                return false;
        return true;
    };
    return closed_under_minus_t(f.top) && closed_under_minus_t(f.bottom);
}

bool is_t_core_colored(const ColoredFrobeniusSymbol& c) {
    auto colors_of = [](const std::vector<ColoredInteger>& row) {
        std::set<long long> colors;
        for (const ColoredInteger& e : row)
            colors.insert(e.color);
        return colors;
    };
    const std::set<long long> top_colors = colors_of(c.top);
    for (const ColoredInteger& e : c.bottom)
        if (top_colors.count(e.color))
            return false;

    auto initial_segments = [](const std::vector<ColoredInteger>& row) {
        std::map<long long, std::vector<long long>> by_color;
        for (const ColoredInteger& e : row)
            by_color[e.color].push_back(e.value);
        for (auto& [color, values] : by_color) {
            std::sort(values.begin(), values.end());
            for (std::size_t i = 0; i < values.size(); ++i)
                if (values[i] != static_cast<long long>(i))
                    return false;
        }
        return true;
    };
    return initial_segments(c.top) && initial_segments(c.bottom);
}

long long count_colored_frobenius(long long n, long long t) {
    require(n >= 0, "n must be nonnegative");
    require(t >= 1, "modulus t must be positive");
    if (n == 0)
        return 1;

    // A strictly decreasing colored row is a set of colored integers; encode
    // the entry (value v, color c) as the rank v*t + c, which is order
    // isomorphic to the colored order. Rows are generated exhaustively and
    // bucketed by (length, value sum); ranks never exceed value n-1.
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(n) + 1,
                                             std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    const long long max_rank = n * t - 1;
    auto gen = [&](auto&& self, long long below_rank, long long len, long long vsum) -> void {
        rows[static_cast<std::size_t>(len)][static_cast<std::size_t>(vsum)] += 1;
        for (long long r = below_rank; r >= 0; --r) {
            const long long v = r / t;
            if (vsum + v + len + 1 > n)
                continue;  // smaller ranks carry smaller values and may still fit
            self(self, r - 1, len + 1, vsum + v);
        }
    };
    gen(gen, max_rank, 0, 0);

    long long total = 0;
    for (long long s = 0; s <= n; ++s)
        for (long long v1 = 0; v1 + s <= n; ++v1)
            total += rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(v1)] *
                     rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(n - s - v1)];
    return total;
}

}  // namespace corequot
