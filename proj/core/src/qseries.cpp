#include "corequot/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "corequot/detail/check.hpp"
#include "corequot/enumeration.hpp"

namespace corequot {

using detail::ensure;
using detail::require;

QSeries::QSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
    require(order >= 0, "series order must be nonnegative");
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::monomial(long long exponent, int order) {
    QSeries s(order);
    s.add_term(exponent, 1);
    return s;
}

const Coeff& QSeries::coeff(long long n) const {
    require(n >= 0 && n <= order_, "coefficient index out of range");
    return c_[static_cast<std::size_t>(n)];
}

void QSeries::set_coeff(long long n, Coeff value) {
    require(n >= 0 && n <= order_, "coefficient index out of range");
    c_[static_cast<std::size_t>(n)] = std::move(value);
}

void QSeries::add_term(long long exponent, const Coeff& value) {
    require(exponent >= 0, "exponents must be nonnegative");
    if (exponent <= order_)
        c_[static_cast<std::size_t>(exponent)] += value;
}

QSeries QSeries::shifted(long long e) const {
    require(e >= 0, "shift exponent must be nonnegative");
    QSeries out(order_);
    for (long long n = e; n <= order_; ++n)
        out.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n - e)];
    return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    require(order_ == rhs.order_, "series orders must match");
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] += rhs.c_[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    require(order_ == rhs.order_, "series orders must match");
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] -= rhs.c_[n];
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& rhs) {
    require(order_ == rhs.order_, "series orders must match");
    std::vector<Coeff> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (rhs.c_[j] != 0)
                out[i + j] += c_[i] * rhs.c_[j];
        }
    }
    c_ = std::move(out);
    return *this;
}

void QSeries::multiply_binomial(int sign, long long e) {
    require(sign == 1 || sign == -1, "sign must be +-1");
    require(e >= 0, "exponents must be nonnegative");
    if (e == 0) {
        // (1 + sign): doubles the series or wipes it out.
        for (Coeff& v : c_)
            v *= 1 + sign;
        return;
    }
    for (long long n = order_; n >= e; --n) {
        if (sign > 0)
            c_[static_cast<std::size_t>(n)] += c_[static_cast<std::size_t>(n - e)];
        else
            c_[static_cast<std::size_t>(n)] -= c_[static_cast<std::size_t>(n - e)];
    }
}

QSeries QSeries::inverse() const {
    require(c_[0] == 1 || c_[0] == -1, "inverse needs a unit constant term");
    const Coeff& a0 = c_[0];
    QSeries out(order_);
    out.c_[0] = a0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Coeff acc = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (c_[i] != 0)
                acc += c_[i] * out.c_[n - i];
        out.c_[n] = -a0 * acc;
    }
    return out;
}

QSeries QSeries::divide_exact(const QSeries& divisor) const {
    return *this * divisor.inverse();
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coeff& v) { return v == 0; });
}

long long QSeries::first_difference(const QSeries& other) const {
    require(order_ == other.order_, "series orders must match");
    for (std::size_t n = 0; n < c_.size(); ++n)
        if (c_[n] != other.c_[n])
            return static_cast<long long>(n);
    return -1;
}

QSeries pochhammer_factor(int sign, long long offset, long long step, bool inverse, int order) {
    require(sign == 1 || sign == -1, "sign must be +-1");
    require(offset >= 0, "offset must be nonnegative");
    require(step >= 1, "step must be positive");
    if (inverse)
        require(offset >= 1, "reciprocal needs a unit constant term");
    QSeries product = QSeries::one(order);
    for (long long e = offset; e <= order; e += step)
        product.multiply_binomial(sign, e);
    return inverse ? product.inverse() : product;
}

int laurent_window_bound(int order) {
    require(order >= 0, "series order must be nonnegative");
    // Smallest W with (W-1)^2 >= order: a discarded term needs q-degree
    // > order to reach z-exponent W+1 and return to z^0.
    int r = 0;
    while (r * r < order)
        ++r;
    return r + 1;
}

LaurentBlock::LaurentBlock(int window, int order) : window_(window), order_(order) {
    require(window >= 0, "window must be nonnegative");
    rows_.assign(2 * static_cast<std::size_t>(window) + 1, QSeries(order));
}

LaurentBlock LaurentBlock::one(int window, int order) {
    LaurentBlock b(window, order);
    b.row(0) = QSeries::one(order);
    return b;
}

QSeries& LaurentBlock::row(long long z_exp) {
    require(z_exp >= -window_ && z_exp <= window_, "z-exponent outside the window");
    return rows_[static_cast<std::size_t>(z_exp + window_)];
}

const QSeries& LaurentBlock::row(long long z_exp) const {
    require(z_exp >= -window_ && z_exp <= window_, "z-exponent outside the window");
    return rows_[static_cast<std::size_t>(z_exp + window_)];
}

void LaurentBlock::multiply_binomial(int z_step, long long q_exp) {
    require(z_step == 1 || z_step == -1, "z-step must be +-1");
    // row[m] += q^e * row[m - z_step], sweeping so sources are unmodified.
    if (z_step == 1) {
        for (long long m = window_; m >= -window_ + 1; --m)
            row(m) += row(m - 1).shifted(q_exp);
    } else {
        for (long long m = -window_; m <= window_ - 1; ++m)
            row(m) += row(m + 1).shifted(q_exp);
    }
}

void LaurentBlock::multiply_pochhammer(int z_step, long long first, long long step) {
    require(step >= 1, "step must be positive");
    for (long long e = first; e <= order_; e += step)
        multiply_binomial(z_step, e);
}

QSeries constant_term_partition_gf(long long t, int order) {
    require(t >= 1, "modulus t must be positive");
    LaurentBlock block = LaurentBlock::one(laurent_window_bound(order), order);
    for (long long j = 1; j <= t; ++j) {
        block.multiply_pochhammer(+1, j, t);      // (-zq^j; q^t)
        block.multiply_pochhammer(-1, t - j, t);  // (-q^{t-j}/z; q^t)
    }
    return block.row(0);
}

QSeries theta_sum_tcore(long long t, int order) {
    require(t >= 1, "modulus t must be positive");
    // Per-coordinate exponent t*m(m-1)/2 + j*m is nonnegative for 1 <= j <= t,
    // so any coordinate at the cap pushes the total past the order.
    long long bound = 1;
    while (bound * bound < 2 * order / t + 1)
        ++bound;
    bound += 2;
    while (t * bound * (bound - 3) / 2 <= order)
        ++bound;
    ensure(t * bound * (bound - 3) / 2 > order, "lattice cap too small");

    QSeries sum(order);
    auto contribution = [t](long long j, long long m) {
        return t * m * (m - 1) / 2 + j * m;
    };
    auto rec = [&](auto&& self, long long j, long long coord_sum, long long exponent) -> void {
        if (j == t) {
            const long long last = -coord_sum;
            if (last <= -bound || last >= bound)
                return;
            const long long total = exponent + contribution(t, last);
            if (total <= order)
                sum.add_term(total, 1);
            return;
        }
        for (long long m = -(bound - 1); m <= bound - 1; ++m) {
            const long long e = exponent + contribution(j, m);
            if (e > order)
                continue;
            if (std::llabs(coord_sum + m) > (bound - 1) * (t - j))
                continue;
            self(self, j + 1, coord_sum + m, e);
        }
    };
    rec(rec, 1, 0, 0);
    return sum;
}

bool IdentityReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const CheckResult* IdentityReport::first_failure() const {
    for (const CheckResult& c : checks)
        if (!c.pass)
            return &c;
    return nullptr;
}

CheckResult compare_series(std::string name, const QSeries& lhs, const QSeries& rhs) {
    CheckResult result;
    result.name = std::move(name);
    const long long mismatch = lhs.first_difference(rhs);
    if (mismatch >= 0) {
        result.pass = false;
        result.mismatch_exponent = mismatch;
        result.lhs = lhs.coeff(mismatch);
        result.rhs = rhs.coeff(mismatch);
    }
    return result;
}

namespace {

// Sum over Z^dims of q^{sum_j (t*m_j*(m_j-1) + linear[j-1]*m_j)}, truncated.
QSeries lattice_theta(long long t, const std::vector<long long>& linear, int order) {
    QSeries sum(order);
    const long long dims = static_cast<long long>(linear.size());
    for (long long weight : linear)
        ensure(weight >= 1 && weight <= 2 * t, "linear weight outside the nonnegative regime");

    long long bound = 1;
    while (bound * bound < order / t + 1)
        ++bound;
    bound += 2;
    auto boundary_ok = [&](long long b) {
        for (long long weight : linear)
            if (t * b * (b - 1) - weight * b <= order || t * b * (b + 1) - weight * b <= order)
                return false;
        return true;
    };
    while (!boundary_ok(bound))
        ++bound;

    auto rec = [&](auto&& self, long long j, long long exponent) -> void {
        if (j == dims) {
            if (exponent <= order)
                sum.add_term(exponent, 1);
            return;
        }
        const long long weight = linear[static_cast<std::size_t>(j)];
        for (long long m = -(bound - 1); m <= bound - 1; ++m) {
            const long long e = exponent + t * m * (m - 1) + weight * m;
            if (e <= order)
                self(self, j + 1, e);
        }
    };
    rec(rec, 0, 0);
    return sum;
}

long long resolve_enum_limit(long long enum_limit, int order) {
    if (enum_limit < 0 || enum_limit > order)
        return order;
    return enum_limit;
}

CheckResult compare_with_counts(std::string name, const QSeries& series, long long limit,
                                long long (*count)(long long, long long), long long t) {
    CheckResult result;
    result.name = std::move(name);
    for (long long n = 0; n <= limit; ++n) {
        const Coeff expected = count(n, t);
        if (series.coeff(n) != expected) {
            result.pass = false;
            result.mismatch_exponent = n;
            result.lhs = series.coeff(n);
            result.rhs = expected;
            break;
        }
    }
    return result;
}

}  // namespace

IdentityReport verify_littlewood_gf(long long t, int order) {
    require(t >= 1, "modulus t must be positive");
    IdentityReport report;
    report.identity = "littlewood";

    const QSeries lhs = pochhammer_factor(-1, 1, 1, true, order);  // 1/(q;q)
    QSeries rhs = theta_sum_tcore(t, order);
    const QSeries euler_t_inv = pochhammer_factor(-1, t, t, true, order);
    for (long long k = 0; k < t; ++k)
        rhs *= euler_t_inv;
    report.checks.push_back(compare_series("partition-gf vs theta/(q^t;q^t)^t", lhs, rhs));
    return report;
}

IdentityReport jacobi_triple_product_check(int order, int window) {
    require(window >= laurent_window_bound(order), "window below the soundness bound");
    IdentityReport report;
    report.identity = "jtp";

    auto build = [order](int w) {
        LaurentBlock block = LaurentBlock::one(w, order);
        block.multiply_pochhammer(+1, 1, 1);  // (-zq; q)
        block.multiply_pochhammer(-1, 0, 1);  // (-1/z; q)
        return block;
    };
    const LaurentBlock block = build(window);
    const int usable = window - laurent_window_bound(order);

    const QSeries euler_inv = pochhammer_factor(-1, 1, 1, true, order);
    for (long long m = -usable; m <= usable; ++m) {
        const long long exponent = m * (m + 1) / 2;
        QSeries rhs(order);
        if (exponent <= order)
            rhs = euler_inv.shifted(exponent);
        report.checks.push_back(
            compare_series("z^" + std::to_string(m) + " row", block.row(m), rhs));
    }

    // Widening the window must not change any row we checked.
    const LaurentBlock wide = build(window + 2);
    bool stable = true;
    for (long long m = -usable; m <= usable && stable; ++m)
        stable = block.row(m) == wide.row(m);
    CheckResult stability;
    stability.name = "window-stability";
    stability.pass = stable;
    report.checks.push_back(std::move(stability));
    return report;
}

IdentityReport verify_constant_term_gf(long long t, int order, long long enum_limit) {
    require(t >= 1, "modulus t must be positive");
    IdentityReport report;
    report.identity = "frobenius-gf";

    const QSeries z0 = constant_term_partition_gf(t, order);
    const QSeries euler_inv = pochhammer_factor(-1, 1, 1, true, order);
    report.checks.push_back(compare_series("[z^0] product vs 1/(q;q)", z0, euler_inv));

    const long long limit = resolve_enum_limit(enum_limit, order);
    report.checks.push_back(compare_with_counts(
        "[z^0] product vs partition counts (n <= " + std::to_string(limit) + ")", z0, limit,
        [](long long n, long long) { return count_partitions(n); }, t));
    return report;
}

IdentityReport verify_theta_tcore(long long t, int order, long long enum_limit) {
    require(t >= 1, "modulus t must be positive");
    IdentityReport report;
    report.identity = "tcore-theta";

    const QSeries theta = theta_sum_tcore(t, order);
    const long long limit = resolve_enum_limit(enum_limit, order);
    report.checks.push_back(compare_with_counts(
        "theta sum vs t-core counts (n <= " + std::to_string(limit) + ")", theta, limit,
        [](long long n, long long tt) { return count_t_cores(n, tt); }, t));
    return report;
}

IdentityReport gf_self_conjugate(long long t, int order, long long enum_limit) {
    require(t >= 2, "modulus t must be at least 2");
    IdentityReport report;
    report.identity = "sc";

    QSeries lhs = QSeries::one(order);
    QSeries rhs(order);
    if (t % 2 == 0) {
        for (long long j = 1; j <= t / 2; ++j) {
            lhs *= pochhammer_factor(+1, 2 * j - 1, 2 * t, false, order);
            lhs *= pochhammer_factor(+1, 2 * t - 2 * j + 1, 2 * t, false, order);
        }
        std::vector<long long> linear;
        for (long long j = 1; j <= t / 2; ++j)
            linear.push_back(2 * j - 1);
        rhs = lattice_theta(t, linear, order);
        const QSeries denom_inv = pochhammer_factor(-1, 2 * t, 2 * t, true, order);
        for (long long k = 0; k < t / 2; ++k)
            rhs *= denom_inv;
    } else {
        lhs *= pochhammer_factor(+1, t, 2 * t, false, order);
        for (long long j = 1; j <= (t - 1) / 2; ++j) {
            lhs *= pochhammer_factor(+1, 2 * j - 1, 2 * t, false, order);
            lhs *= pochhammer_factor(+1, 2 * t - 2 * j + 1, 2 * t, false, order);
        }
        std::vector<long long> linear;
        for (long long j = 1; j <= (t - 1) / 2; ++j)
            linear.push_back(2 * j - 1);
        rhs = lattice_theta(t, linear, order);
        rhs *= pochhammer_factor(+1, t, 2 * t, false, order);
        const QSeries denom_inv = pochhammer_factor(-1, 2 * t, 2 * t, true, order);
        for (long long k = 0; k < (t - 1) / 2; ++k)
            rhs *= denom_inv;
    }
    report.checks.push_back(compare_series("product vs theta sum", lhs, rhs));

    const long long limit = resolve_enum_limit(enum_limit, order);
    report.checks.push_back(compare_with_counts(
        "product vs self-conjugate counts (n <= " + std::to_string(limit) + ")", lhs, limit,
        [](long long n, long long) { return count_self_conjugate(n); }, t));
    return report;
}

IdentityReport gf_doubled_distinct(long long t, int order, long long enum_limit) {
    require(t >= 2, "modulus t must be at least 2");
    IdentityReport report;
    report.identity = "dd";

    QSeries lhs = QSeries::one(order);
    QSeries rhs(order);
    if (t % 2 == 1) {
        lhs *= pochhammer_factor(+1, 2 * t, 2 * t, false, order);
        for (long long j = 1; j <= (t - 1) / 2; ++j) {
            lhs *= pochhammer_factor(+1, 2 * j, 2 * t, false, order);
            lhs *= pochhammer_factor(+1, 2 * t - 2 * j, 2 * t, false, order);
        }
        std::vector<long long> linear;
        for (long long j = 1; j <= (t - 1) / 2; ++j)
            linear.push_back(2 * j);
        rhs = lattice_theta(t, linear, order);
        rhs *= pochhammer_factor(+1, 2 * t, 2 * t, false, order);
        const QSeries denom_inv = pochhammer_factor(-1, 2 * t, 2 * t, true, order);
        for (long long k = 0; k < (t - 1) / 2; ++k)
            rhs *= denom_inv;
    } else {
        lhs *= pochhammer_factor(+1, t, 2 * t, false, order);
        lhs *= pochhammer_factor(+1, 2 * t, 2 * t, false, order);
        for (long long j = 1; j <= t / 2 - 1; ++j) {
            lhs *= pochhammer_factor(+1, 2 * j, 2 * t, false, order);
            lhs *= pochhammer_factor(+1, 2 * t - 2 * j, 2 * t, false, order);
        }
        std::vector<long long> linear;
        for (long long j = 1; j <= t / 2 - 1; ++j)
            linear.push_back(2 * j);
        rhs = lattice_theta(t, linear, order);
        rhs *= pochhammer_factor(+1, t, t, false, order);
        const QSeries denom_inv = pochhammer_factor(-1, 2 * t, 2 * t, true, order);
        for (long long k = 0; k < t / 2 - 1; ++k)
            rhs *= denom_inv;
    }
    report.checks.push_back(compare_series("product vs theta sum", lhs, rhs));

    const long long limit = resolve_enum_limit(enum_limit, order);
    report.checks.push_back(compare_with_counts(
        "product vs doubled distinct counts (n <= " + std::to_string(limit) + ")", lhs, limit,
        [](long long n, long long) { return count_doubled_distinct(n); }, t));
    return report;
}

}  // namespace corequot
