#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrg/enumerate.hpp"

namespace rrg {

/* Two series with different truncation orders were combined. */
class TruncationMismatch : public std::runtime_error {
public:
    TruncationMismatch(int lhs, int rhs);
    int lhs() const noexcept { return lhs_; }
    int rhs() const noexcept { return rhs_; }

private:
    int lhs_;
    int rhs_;
};

/* A power series in q truncated at a fixed order N: coefficients of
 * q^0..q^N stored densely as exact integers. Arithmetic never consults
 * exponents beyond N. */
class QPolynomial {
public:
    explicit QPolynomial(int truncation_order);

    static QPolynomial one(int truncation_order);

    int truncation_order() const noexcept { return order_; }

    const mpz_class& coeff(int power) const;
    void set_coeff(int power, mpz_class value);
    void add_coeff(int power, const mpz_class& value);

    QPolynomial& operator+=(const QPolynomial& other);
    QPolynomial& operator*=(const QPolynomial& other);

    // this += other * q^shift, dropping anything past the truncation
    void add_shifted(const QPolynomial& other, int shift);

    // this *= 1/(1 - q^step), i.e. a running prefix sum with stride step
    void mul_inv_geometric(int step);

    QPolynomial truncated(int new_order) const;

    bool is_zero() const;

    /* comparing polynomials truncated at different orders is a usage error,
     * not an inequality, so it throws TruncationMismatch */
    friend bool operator==(const QPolynomial& lhs, const QPolynomial& rhs);

private:
    int order_;
    std::vector<mpz_class> c_;
};

QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs);
QPolynomial poly_mul(const QPolynomial& lhs, const QPolynomial& rhs);

/* 1 / ((q^alpha; q^alpha)_m) truncated at the given order: the generating
 * function for partitions into parts from {alpha, 2 alpha, ..., m alpha}. */
QPolynomial inv_pochhammer(int alpha, int m, int truncation_order);

/* prod 1/(1-q^j) over j <= N with j not congruent to 0, a, -a mod 2k+1:
 * the modulus-side generating function. */
QPolynomial product_side(int k, int a, int truncation_order);

/* sum over m,n >= 0 of q^{(m+n)^2 + n^2} / ((q;q)_m (q;q)_n). */
QPolynomial andrews_sum_k3(int truncation_order);

/* A series in x and q truncated at q-order N with x tracked up to x_max;
 * terms of higher x-degree are dropped, not errored. Absent x-degrees are
 * zero. */
class XQSeries {
public:
    XQSeries(int truncation_order, int x_max);

    int truncation_order() const noexcept { return order_; }
    int x_max() const noexcept { return x_max_; }

    const mpz_class& coeff(int x_deg, int q_deg) const;
    void add_coeff(int x_deg, int q_deg, const mpz_class& value);

    // terms_[x_deg] += p * q^shift
    void add_shifted(int x_deg, const QPolynomial& p, int q_shift);

    // evaluation at x = 1
    QPolynomial sum_over_x() const;

    const std::map<int, QPolynomial>& terms() const noexcept { return terms_; }

    XQSeries truncated(int new_order, int new_x_max) const;

    // header "xdeg qdeg coeff", nonzero entries sorted by (xdeg, qdeg)
    std::string to_tsv() const;
    // {"terms":[[x,q,"coeff"],...],"truncation":N,"xmax":X}
    std::string to_json() const;

private:
    int order_;
    int x_max_;
    std::map<int, QPolynomial> terms_;
};

/* Compares all coefficients with x_deg <= x_bound, q_deg <= q_bound.
 * On mismatch returns false and, if given, fills *mismatch with a
 * human-readable cell description. */
bool xq_equal(const XQSeries& lhs, const XQSeries& rhs, int q_bound, int x_bound,
              std::string* mismatch = nullptr);

/* The three sum sides at k=3, refined by x tracking the number of parts:
 * term (m, n) contributes q^w x^{2m+n} / ((q^2;q^2)_m (q;q)_n) with w the
 * minimal shape weight for m pairs and n singletons. */
XQSeries t_series(int a, int truncation_order, int x_max);

/* Lifts a difference-side CountTable into the same shape: coefficient of
 * x^m q^n is the count of partitions of n with m parts. Throws
 * std::invalid_argument on a modulus-side table. */
XQSeries series_from_counts(const CountTable& table);

}  // namespace rrg
