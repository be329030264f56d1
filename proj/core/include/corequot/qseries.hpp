#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace corequot {

/// Exact integer coefficients; identity checks stay overflow-free by type.
using Coeff = boost::multiprecision::cpp_int;

/// Power series in q over the integers, truncated at a fixed order N:
/// coefficients c_0..c_N are exact, everything above is discarded.
class QSeries {
public:
    explicit QSeries(int order);
    static QSeries one(int order);
    static QSeries monomial(long long exponent, int order);

    int order() const noexcept { return order_; }
    const Coeff& coeff(long long n) const;
    void set_coeff(long long n, Coeff value);
    /// Add value * q^exponent; exponents above the order are dropped.
    void add_term(long long exponent, const Coeff& value);

    /// this * q^e, truncated.
    QSeries shifted(long long e) const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const QSeries& rhs);
    friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
    friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
    friend QSeries operator*(QSeries lhs, const QSeries& rhs) { return lhs *= rhs; }

    /// Multiply in place by (1 + sign * q^e).
    void multiply_binomial(int sign, long long e);

    /// Multiplicative inverse; the constant term must be +1 or -1.
    QSeries inverse() const;
    /// Exact division; the divisor's constant term must be +1 or -1.
    QSeries divide_exact(const QSeries& divisor) const;

    bool is_zero() const;
    /// Smallest exponent where the two series differ, or -1 when equal.
    long long first_difference(const QSeries& other) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    int order_ = 0;
    std::vector<Coeff> c_;
};

/// Truncated product prod_{k>=0} (1 + sign*q^{offset + k*step}), or its
/// reciprocal. The reciprocal requires offset >= 1 so the constant term is 1.
QSeries pochhammer_factor(int sign, long long offset, long long step, bool inverse, int order);

/// Window half-width that keeps the z^0 row exact to the given order:
/// leaving the window and coming back costs q-degree > order.
int laurent_window_bound(int order);

/// A z-graded stack of truncated q-series: one row per z-exponent in
/// [-window, window]. Binomial factors in z shift rows; contributions that
/// leave the window are discarded, which the window bound makes harmless.
class LaurentBlock {
public:
    LaurentBlock(int window, int order);
    static LaurentBlock one(int window, int order);

    int window() const noexcept { return window_; }
    int order() const noexcept { return order_; }
    QSeries& row(long long z_exp);
    const QSeries& row(long long z_exp) const;

    /// Multiply in place by (1 + z^{z_step} q^{q_exp}) with z_step in {-1,+1}.
    void multiply_binomial(int z_step, long long q_exp);
    /// Multiply by every factor (1 + z^{z_step} q^{first + k*step}) whose
    /// exponent fits under the order.
    void multiply_pochhammer(int z_step, long long first, long long step);

private:
    int window_ = 0;
    int order_ = 0;
    std::vector<QSeries> rows_;
};

/// z^0 row of prod_{j=1..t} (-zq^j; q^t)_inf (-q^{t-j}/z; q^t)_inf; equals
/// the partition generating function 1/(q;q)_inf.
QSeries constant_term_partition_gf(long long t, int order);

/// Sum of q^{t*sum m_j(m_j-1)/2 + sum j*m_j} over integer vectors
/// (m_1..m_t) with zero sum; the t-core counting series.
QSeries theta_sum_tcore(long long t, int order);

/// One named coefficient-wise comparison; records the first mismatch.
struct CheckResult {
    std::string name;
    bool pass = true;
    long long mismatch_exponent = -1;
    Coeff lhs = 0;
    Coeff rhs = 0;
};

struct IdentityReport {
    std::string identity;
    std::vector<CheckResult> checks;

    bool pass() const;
    const CheckResult* first_failure() const;
};

CheckResult compare_series(std::string name, const QSeries& lhs, const QSeries& rhs);

/// 1/(q;q)_inf == theta_sum_tcore(t) / (q^t;q^t)_inf^t, both sides computed
/// independently.
IdentityReport verify_littlewood_gf(long long t, int order);

/// Rows [-M', M'] of (-zq;q)_inf (-1/z;q)_inf against q^{m(m+1)/2}/(q;q)_inf,
/// where M' = window - laurent_window_bound(order). Also re-runs the product
/// with a widened window and demands bit-identical rows.
IdentityReport jacobi_triple_product_check(int order, int window);

/// [z^0] product identity for partitions at modulus t: the constant-term row
/// against the Euler product inverse, plus brute-force partition counts up
/// to enum_limit (defaults to the full order).
IdentityReport verify_constant_term_gf(long long t, int order, long long enum_limit = -1);

/// theta_sum_tcore coefficients against exhaustive t-core counts.
IdentityReport verify_theta_tcore(long long t, int order, long long enum_limit = -1);

/// Self-conjugate generating function at modulus t (parity-split product vs
/// prefactor times lattice sum), cross-checked against exhaustive counts.
IdentityReport gf_self_conjugate(long long t, int order, long long enum_limit = -1);

/// Doubled distinct analogue.
IdentityReport gf_doubled_distinct(long long t, int order, long long enum_limit = -1);

}  // namespace corequot
