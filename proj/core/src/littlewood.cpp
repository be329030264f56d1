#include "corequot/littlewood.hpp"

#include <algorithm>
#include <numeric>

#include "corequot/detail/check.hpp"

namespace corequot {

using detail::ensure;
using detail::require;

std::vector<TwoRowedArray> split_by_color(const ColoredFrobeniusSymbol& c) {
    const long long t = c.modulus;
    std::vector<std::vector<long long>> tops(static_cast<std::size_t>(t));
    std::vector<std::vector<long long>> bottoms(static_cast<std::size_t>(t));
    // Decoded values decrease along each row, so within one color the values
    // are already strictly decreasing in column order.
    for (const ColoredInteger& e : c.top)
        tops[static_cast<std::size_t>(e.color)].push_back(e.value);
    for (const ColoredInteger& e : c.bottom)
        bottoms[static_cast<std::size_t>(e.color)].push_back(e.value);
    std::vector<TwoRowedArray> arrays;
    arrays.reserve(static_cast<std::size_t>(t));
    for (long long j = 0; j < t; ++j)
        arrays.emplace_back(std::move(tops[static_cast<std::size_t>(j)]),
                            std::move(bottoms[static_cast<std::size_t>(j)]));
    return arrays;
}

namespace {

// Assemble the colored symbol of the t-core that has surplus w_j in color j:
// colors with w_j > 0 contribute top values w_j-1,...,0, colors with w_j < 0
// contribute bottom values -w_j-1,...,0. Rows are sorted by decoded value.
ColoredFrobeniusSymbol core_symbol_from_charvec(const std::vector<long long>& charvec,
                                                long long t) {
    std::vector<ColoredInteger> top, bottom;
    for (long long j = 0; j < t; ++j) {
        const long long w = charvec[static_cast<std::size_t>(j)];
        for (long long value = w > 0 ? w - 1 : -w - 1; value >= 0; --value) {
            if (w > 0)
                top.push_back(ColoredInteger{value, j, t});
            else
                bottom.push_back(ColoredInteger{value, j, t});
        }
    }
    std::sort(top.begin(), top.end(), [](const ColoredInteger& x, const ColoredInteger& y) {
        return decode_top(x) > decode_top(y);
    });
    std::sort(bottom.begin(), bottom.end(), [](const ColoredInteger& x, const ColoredInteger& y) {
        return decode_bottom(x) > decode_bottom(y);
    });
    ensure(top.size() == bottom.size(), "charvec with nonzero sum cannot encode a core");
    return ColoredFrobeniusSymbol(std::move(top), std::move(bottom), t);
}

}  // namespace

std::vector<long long> core_char_vector(const Partition& core, long long t) {
    require(t >= 1, "modulus t must be positive");
    const ColoredFrobeniusSymbol c = to_colored(to_frobenius(core), t);
    std::vector<long long> w(static_cast<std::size_t>(t), 0);
    for (const ColoredInteger& e : c.top)
        w[static_cast<std::size_t>(e.color)] += 1;
    for (const ColoredInteger& e : c.bottom)
        w[static_cast<std::size_t>(e.color)] -= 1;
    return w;
}

Decomposition decompose(const Partition& p, long long t) {
    require(t >= 1, "modulus t must be positive");
    const ColoredFrobeniusSymbol colored = to_colored(to_frobenius(p), t);
    const std::vector<TwoRowedArray> arrays = split_by_color(colored);

    Decomposition d;
    d.modulus = t;
    d.charvec.reserve(static_cast<std::size_t>(t));
    d.quotient.reserve(static_cast<std::size_t>(t));
    for (const TwoRowedArray& a : arrays) {
        const WrightImage image = wright_forward(a);
        ensure(image.offset == a.top_length() - a.bottom_length(),
               "Wright offset disagrees with color surplus");
        d.charvec.push_back(image.offset);
        d.quotient.push_back(image.mu);
    }

    const ColoredFrobeniusSymbol core_symbol = core_symbol_from_charvec(d.charvec, t);
    d.core = from_frobenius(from_colored(core_symbol));

    ensure(std::accumulate(d.charvec.begin(), d.charvec.end(), 0LL) == 0,
           "characteristic vector must sum to zero");
    ensure(core_char_vector(d.core, t) == d.charvec,
           "charvec re-derived from the core disagrees with the split");
    long long quotient_size = 0;
    for (const Partition& q : d.quotient)
        quotient_size += q.size();
    ensure(p.size() == d.core.size() + t * quotient_size,
           "size identity |p| = |core| + t*|quotient| failed");
    return d;
}

Partition compose(const Partition& core, const std::vector<Partition>& quotient, long long t) {
    require(t >= 1, "modulus t must be positive");
    require(static_cast<long long>(quotient.size()) == t,
            "quotient must have exactly t components");
    require(is_t_core_frobenius(to_frobenius(core), t), "core must be a t-core");

    const std::vector<long long> charvec = core_char_vector(core, t);
    std::vector<ColoredInteger> top, bottom;
    for (long long j = 0; j < t; ++j) {
        const TwoRowedArray a =
            wright_backward(charvec[static_cast<std::size_t>(j)], quotient[static_cast<std::size_t>(j)]);
        for (long long value : a.top)
            top.push_back(ColoredInteger{value, j, t});
        for (long long value : a.bottom)
            bottom.push_back(ColoredInteger{value, j, t});
    }
    std::sort(top.begin(), top.end(), [](const ColoredInteger& x, const ColoredInteger& y) {
        return decode_top(x) > decode_top(y);
    });
    std::sort(bottom.begin(), bottom.end(), [](const ColoredInteger& x, const ColoredInteger& y) {
        return decode_bottom(x) > decode_bottom(y);
    });
    ensure(top.size() == bottom.size(), "merged colored rows must have equal length");

    const ColoredFrobeniusSymbol merged(std::move(top), std::move(bottom), t);
    return from_frobenius(from_colored(merged));
}

std::vector<long long> char_vector(const Partition& p, long long t) {
    return decompose(p, t).charvec;
}

long long quotient_hook1_count(const Decomposition& d) {
    long long count = 0;
    for (const Partition& q : d.quotient)
        count += count_hooks_of_length(q, 1);
    return count;
}

}  // namespace corequot
