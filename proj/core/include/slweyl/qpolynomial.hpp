#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "slweyl/bigint.hpp"

namespace slweyl {

/// Sparse univariate polynomial in q with exact integer coefficients.
///
/// Terms with coefficient zero are never stored and all exponents are
/// non-negative, so structural equality coincides with mathematical equality.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(BigInt constant);
    QPolynomial(std::initializer_list<std::pair<int, BigInt>> terms);

    static QPolynomial monomial(int exponent, BigInt coeff = BigInt(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const;
    BigInt coefficient(int exponent) const;
    const std::map<int, BigInt>& coefficients() const { return coeffs_; }

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial operator-() const;
    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);

    /// Multiply by q^dq; dq must be non-negative.
    QPolynomial shifted(int dq) const;

    /// Sum of all coefficients (evaluation at q = 1).
    BigInt eval_at_one() const;

    bool operator==(const QPolynomial&) const = default;

    /// Human-readable form, e.g. "1 + q + 2q^2". Zero prints as "0".
    std::string to_string() const;

private:
    void set(int exponent, BigInt coeff);

    std::map<int, BigInt> coeffs_;
};

/// Gaussian binomial coefficient [n choose r]_q.
///
/// Returns the zero polynomial when r < 0 or r > n; throws
/// std::invalid_argument when n < 0. The result has degree r(n-r),
/// positive palindromic coefficients, and evaluates at q = 1 to the
/// ordinary binomial coefficient.
QPolynomial qbinom(int n, int r);

}  // namespace slweyl
