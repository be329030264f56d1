#include "corequot/special_classes.hpp"

#include "corequot/detail/check.hpp"
#include "corequot/frobenius.hpp"
#include "corequot/littlewood.hpp"

namespace corequot {

using detail::ensure;
using detail::require;

DistinctPartition::DistinctPartition(Partition p) : p_(std::move(p)) {
    for (int i = 1; i < p_.length(); ++i)
        require(p_.part(i) > p_.part(i + 1), "parts must be strictly decreasing");
}

DistinctPartition::DistinctPartition(std::initializer_list<long long> parts)
    : DistinctPartition(Partition(parts)) {}

bool is_self_conjugate(const Partition& p) {
    const bool by_conjugate = conjugate(p) == p;
    const FrobeniusSymbol f = to_frobenius(p);
    const bool by_symbol = f.top == f.bottom;
    ensure(by_conjugate == by_symbol, "the two self-conjugacy criteria disagree");
    return by_conjugate;
}

Partition double_distinct(const DistinctPartition& delta) {
    const Partition& d = delta.partition();
    std::vector<long long> top = d.parts();
    std::vector<long long> bottom;
    bottom.reserve(top.size());
    for (long long a : top)
        bottom.push_back(a - 1);
    FrobeniusSymbol f(std::move(top), std::move(bottom));
    ensure(f.weight() == 2 * d.size(), "doubled distinct weight must be 2|delta|");
    return from_frobenius(f);
}

bool is_doubled_distinct(const Partition& p) {
    const FrobeniusSymbol f = to_frobenius(p);
    for (int i = 0; i < f.columns(); ++i)
        if (f.bottom[static_cast<std::size_t>(i)] != f.top[static_cast<std::size_t>(i)] - 1)
            return false;
    return true;
}

ClassReport verify_sc_decomposition(const Partition& p, long long t) {
    require(t >= 1, "modulus t must be positive");
    require(is_self_conjugate(p), "input must be self-conjugate");

    const Decomposition d = decompose(p, t);
    ClassReport report;
    report.input = p;
    report.modulus = t;

    auto add = [&report](std::string name, bool ok) {
        report.checks.emplace_back(std::move(name), ok);
        report.pass = report.pass && ok;
    };

    add("core-self-conjugate", is_self_conjugate(d.core));
    for (long long j = 0; j < t; ++j) {
        const std::size_t mirror = static_cast<std::size_t>(t - j - 1);
        add("quotient-" + std::to_string(j) + "-conjugate-of-" + std::to_string(t - j - 1),
            conjugate(d.quotient[static_cast<std::size_t>(j)]) == d.quotient[mirror]);
    }
    return report;
}

ClassReport verify_dd_decomposition(const Partition& p, long long t) {
    require(t >= 1, "modulus t must be positive");
    require(is_doubled_distinct(p), "input must be doubled distinct");

    const Decomposition d = decompose(p, t);
    ClassReport report;
    report.input = p;
    report.modulus = t;

    auto add = [&report](std::string name, bool ok) {
        report.checks.emplace_back(std::move(name), ok);
        report.pass = report.pass && ok;
    };

    // Column rule: top t*q (q >= 1) sits over t*(q-1)+(t-1), giving colors
    // (0 | 0); top t*q+r with 1 <= r <= t-1 sits over t*q+r-1, giving (r | t-r).
    const FrobeniusSymbol f = to_frobenius(p);
    const ColoredFrobeniusSymbol c = to_colored(f, t);
    bool columns_ok = true;
    for (int i = 0; i < c.columns(); ++i) {
        const ColoredInteger& a = c.top[static_cast<std::size_t>(i)];
        const ColoredInteger& b = c.bottom[static_cast<std::size_t>(i)];
        if (a.color == 0) {
            ensure(a.value >= 1, "column with color 0 on top needs value >= 1");
            columns_ok = columns_ok && b.value == a.value - 1 && b.color == 0;
        } else {
            columns_ok = columns_ok && b.value == a.value && b.color == t - a.color;
        }
    }
    add("column-rule", columns_ok);

    add("core-doubled-distinct", is_doubled_distinct(d.core));
    add("quotient-0-doubled-distinct", is_doubled_distinct(d.quotient.front()));
    for (long long j = 1; j < t; ++j) {
        const std::size_t mirror = static_cast<std::size_t>(t - j);
        add("quotient-" + std::to_string(j) + "-conjugate-of-" + std::to_string(t - j),
            conjugate(d.quotient[static_cast<std::size_t>(j)]) == d.quotient[mirror]);
    }
    return report;
}

}  // namespace corequot
