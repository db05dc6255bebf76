#include "rrg/qseries.hpp"

#include <json.hpp>

namespace rrg {

namespace {
const mpz_class kZero = 0;
}

TruncationMismatch::TruncationMismatch(int lhs, int rhs)
    : std::runtime_error("truncation orders differ: " + std::to_string(lhs) + " vs " +
                         std::to_string(rhs)),
      lhs_(lhs),
      rhs_(rhs) {}

QPolynomial::QPolynomial(int truncation_order) : order_(truncation_order) {
    if (order_ < 0) throw std::invalid_argument("truncation order must be nonnegative");
    c_.resize(static_cast<std::size_t>(order_) + 1);
}

QPolynomial QPolynomial::one(int truncation_order) {
    QPolynomial p(truncation_order);
    p.c_[0] = 1;
    return p;
}

const mpz_class& QPolynomial::coeff(int power) const {
    if (power < 0 || power > order_)
        throw std::out_of_range("power " + std::to_string(power) +
                                " outside truncation order " + std::to_string(order_));
    return c_[static_cast<std::size_t>(power)];
}

void QPolynomial::set_coeff(int power, mpz_class value) {
    if (power < 0 || power > order_)
        throw std::out_of_range("power " + std::to_string(power) +
                                " outside truncation order " + std::to_string(order_));
    c_[static_cast<std::size_t>(power)] = std::move(value);
}

void QPolynomial::add_coeff(int power, const mpz_class& value) {
    if (power < 0 || power > order_)
        throw std::out_of_range("power " + std::to_string(power) +
                                " outside truncation order " + std::to_string(order_));
    c_[static_cast<std::size_t>(power)] += value;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (order_ != other.order_) throw TruncationMismatch(order_, other.order_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
}

QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
    lhs += rhs;
    return lhs;
}

bool operator==(const QPolynomial& lhs, const QPolynomial& rhs) {
    if (lhs.order_ != rhs.order_) throw TruncationMismatch(lhs.order_, rhs.order_);
    return lhs.c_ == rhs.c_;
}

QPolynomial poly_mul(const QPolynomial& lhs, const QPolynomial& rhs) {
    const int order = lhs.truncation_order();
    if (order != rhs.truncation_order())
        throw TruncationMismatch(order, rhs.truncation_order());
    QPolynomial out(order);
    for (int i = 0; i <= order; ++i) {
        const mpz_class& a = lhs.coeff(i);
        if (a == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            const mpz_class& b = rhs.coeff(j);
            if (b == 0) continue;
            out.add_coeff(i + j, a * b);
        }
    }
    return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
    *this = poly_mul(*this, other);
    return *this;
}

void QPolynomial::add_shifted(const QPolynomial& other, int shift) {
    if (order_ != other.order_) throw TruncationMismatch(order_, other.order_);
    if (shift < 0) throw std::invalid_argument("shift must be nonnegative");
    for (int i = 0; i + shift <= order_; ++i)
        c_[static_cast<std::size_t>(i + shift)] += other.c_[static_cast<std::size_t>(i)];
}

void QPolynomial::mul_inv_geometric(int step) {
    if (step <= 0) throw std::invalid_argument("step must be positive");
    // (sum_i c_i q^i) / (1 - q^step): a running sum with stride `step`
    for (int i = step; i <= order_; ++i)
        c_[static_cast<std::size_t>(i)] += c_[static_cast<std::size_t>(i - step)];
}

QPolynomial QPolynomial::truncated(int new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("cannot extend a truncated series");
    QPolynomial out(new_order);
    for (int i = 0; i <= new_order; ++i) out.c_[i] = c_[i];
    return out;
}

bool QPolynomial::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

QPolynomial inv_pochhammer(int alpha, int m, int truncation_order) {
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    QPolynomial out = QPolynomial::one(truncation_order);
    for (int j = 1; j <= m; ++j) {
        const long step = static_cast<long>(alpha) * j;
        if (step > truncation_order) break;  // further factors are 1 after truncation
        out.mul_inv_geometric(static_cast<int>(step));
    }
    return out;
}

QPolynomial product_side(int k, int a, int truncation_order) {
    check_difference(std::span<const int>{}, k, a);  // parameter validation only
    QPolynomial out = QPolynomial::one(truncation_order);
    const int mod = 2 * k + 1;
    for (int j = 1; j <= truncation_order; ++j) {
        const int r = j % mod;
        if (r == 0 || r == a || r == mod - a) continue;
        out.mul_inv_geometric(j);
    }
    return out;
}

QPolynomial andrews_sum_k3(int truncation_order) {
    QPolynomial out(truncation_order);
    for (int n = 0; 2 * static_cast<std::int64_t>(n) * n <= truncation_order; ++n) {
        const QPolynomial pn = inv_pochhammer(1, n, truncation_order);
        for (int m = 0;; ++m) {
            const std::int64_t e =
                static_cast<std::int64_t>(m + n) * (m + n) + static_cast<std::int64_t>(n) * n;
            if (e > truncation_order) break;
            out.add_shifted(poly_mul(inv_pochhammer(1, m, truncation_order), pn),
                            static_cast<int>(e));
        }
    }
    return out;
}

XQSeries::XQSeries(int truncation_order, int x_max) : order_(truncation_order), x_max_(x_max) {
    if (order_ < 0) throw std::invalid_argument("truncation order must be nonnegative");
    if (x_max_ < 0) throw std::invalid_argument("x_max must be nonnegative");
}

const mpz_class& XQSeries::coeff(int x_deg, int q_deg) const {
    if (q_deg < 0 || q_deg > order_)
        throw std::out_of_range("q power " + std::to_string(q_deg) +
                                " outside truncation order " + std::to_string(order_));
    auto it = terms_.find(x_deg);
    if (it == terms_.end()) return kZero;
    return it->second.coeff(q_deg);
}

void XQSeries::add_coeff(int x_deg, int q_deg, const mpz_class& value) {
    if (x_deg < 0) throw std::invalid_argument("x degree must be nonnegative");
    if (x_deg > x_max_) return;
    auto [it, inserted] = terms_.try_emplace(x_deg, order_);
    it->second.add_coeff(q_deg, value);
}

void XQSeries::add_shifted(int x_deg, const QPolynomial& p, int q_shift) {
    if (x_deg < 0) throw std::invalid_argument("x degree must be nonnegative");
    if (x_deg > x_max_) return;
    auto [it, inserted] = terms_.try_emplace(x_deg, order_);
    it->second.add_shifted(p, q_shift);
}

QPolynomial XQSeries::sum_over_x() const {
    QPolynomial out(order_);
    for (const auto& [x, p] : terms_) out += p;
    return out;
}

XQSeries XQSeries::truncated(int new_order, int new_x_max) const {
    XQSeries out(new_order, new_x_max);
    for (const auto& [x, p] : terms_) {
        if (x > new_x_max) continue;
        out.terms_.emplace(x, p.truncated(new_order));
    }
    return out;
}

std::string XQSeries::to_tsv() const {
    std::string out = "xdeg\tqdeg\tcoeff\n";
    for (const auto& [x, p] : terms_)
        for (int q = 0; q <= order_; ++q) {
            const mpz_class& c = p.coeff(q);
            if (c == 0) continue;
            out += std::to_string(x);
            out += '\t';
            out += std::to_string(q);
            out += '\t';
            out += c.get_str();
            out += '\n';
        }
    return out;
}

std::string XQSeries::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [x, p] : terms_)
        for (int q = 0; q <= order_; ++q) {
            const mpz_class& c = p.coeff(q);
            if (c == 0) continue;
            terms.push_back({x, q, c.get_str()});
        }
    nlohmann::json j;
    j["truncation"] = order_;
    j["xmax"] = x_max_;
    j["terms"] = std::move(terms);
    return j.dump();
}

bool xq_equal(const XQSeries& lhs, const XQSeries& rhs, int q_bound, int x_bound,
              std::string* mismatch) {
    if (q_bound > lhs.truncation_order() || q_bound > rhs.truncation_order())
        throw TruncationMismatch(lhs.truncation_order(), rhs.truncation_order());
    for (int x = 0; x <= x_bound; ++x)
        for (int q = 0; q <= q_bound; ++q) {
            const mpz_class& a = lhs.coeff(x, q);
            const mpz_class& b = rhs.coeff(x, q);
            if (a != b) {
                if (mismatch)
                    *mismatch = "x^" + std::to_string(x) + " q^" + std::to_string(q) + ": " +
                                a.get_str() + " vs " + b.get_str();
                return false;
            }
        }
    return true;
}

XQSeries t_series(int a, int truncation_order, int x_max) {
    if (a < 1 || a > 3) throw std::invalid_argument("a must be 1, 2 or 3");
    XQSeries out(truncation_order, x_max);
    for (int m = 0; minimal_shape_weight(a, m, 0) <= truncation_order; ++m) {
        const QPolynomial pm = inv_pochhammer(2, m, truncation_order);
        for (int n = 0;; ++n) {
            const std::int64_t e = minimal_shape_weight(a, m, n);
            if (e > truncation_order) break;
            if (2 * m + n > x_max) continue;  // dropped, not an error
            out.add_shifted(2 * m + n, poly_mul(pm, inv_pochhammer(1, n, truncation_order)),
                            static_cast<int>(e));
        }
    }
    return out;
}

XQSeries series_from_counts(const CountTable& table) {
    if (table.side != Side::difference)
        throw std::invalid_argument("expected a difference-side count table");
    XQSeries out(table.max_weight, table.max_weight);
    for (int n = 0; n <= table.max_weight; ++n)
        for (int m = 0; m <= n; ++m) {
            const std::uint64_t c = table.at(n, m);
            if (c) out.add_coeff(m, n, mpz_class(static_cast<unsigned long>(c)));
        }
    return out;
}

}  // namespace rrg
