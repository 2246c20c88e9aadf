#include "slweyl/qpolynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace slweyl {

QPolynomial::QPolynomial(BigInt constant) {
    set(0, std::move(constant));
}

QPolynomial::QPolynomial(std::initializer_list<std::pair<int, BigInt>> terms) {
    for (const auto& [exp, coeff] : terms) {
        set(exp, coefficient(exp) + coeff);
    }
}

QPolynomial QPolynomial::monomial(int exponent, BigInt coeff) {
    QPolynomial p;
    p.set(exponent, std::move(coeff));
    return p;
}

void QPolynomial::set(int exponent, BigInt coeff) {
    if (exponent < 0) {
        throw std::invalid_argument("QPolynomial: negative exponent");
    }
    if (coeff == 0) {
        coeffs_.erase(exponent);
    } else {
        coeffs_[exponent] = std::move(coeff);
    }
}

int QPolynomial::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

BigInt QPolynomial::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    for (const auto& [exp, coeff] : rhs.coeffs_) {
        set(exp, coefficient(exp) + coeff);
    }
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    for (const auto& [exp, coeff] : rhs.coeffs_) {
        set(exp, coefficient(exp) - coeff);
    }
    return *this;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial out;
    for (const auto& [exp, coeff] : coeffs_) {
        out.coeffs_.emplace(exp, -coeff);
    }
    return out;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
    QPolynomial out;
    for (const auto& [ea, ca] : lhs.coeffs_) {
        for (const auto& [eb, cb] : rhs.coeffs_) {
            out.set(ea + eb, out.coefficient(ea + eb) + ca * cb);
        }
    }
    return out;
}

QPolynomial QPolynomial::shifted(int dq) const {
    if (dq < 0) {
        throw std::invalid_argument("QPolynomial::shifted: negative shift");
    }
    QPolynomial out;
    for (const auto& [exp, coeff] : coeffs_) {
        out.coeffs_.emplace(exp + dq, coeff);
    }
    return out;
}

BigInt QPolynomial::eval_at_one() const {
    BigInt total = 0;
    for (const auto& [exp, coeff] : coeffs_) {
        total += coeff;
    }
    return total;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [exp, coeff] : coeffs_) {
        BigInt abs_coeff = abs(coeff);
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        if (abs_coeff != 1 || exp == 0) {
            out += abs_coeff.get_str();
        }
        if (exp == 1) {
            out += "q";
        } else if (exp > 1) {
            out += "q^" + std::to_string(exp);
        }
    }
    return out;
}

QPolynomial qbinom(int n, int r) {
    if (n < 0) {
        throw std::invalid_argument("qbinom: n must be non-negative");
    }
    if (r < 0 || r > n) {
        return {};
    }
    // Row DP over the q-Pascal recurrence
    //   [i, j]_q = [i-1, j-1]_q + q^j [i-1, j]_q.
    std::vector<QPolynomial> row(static_cast<size_t>(r) + 1);
    row[0] = QPolynomial(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, r); j >= 1; --j) {
            row[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j) - 1] + row[static_cast<size_t>(j)].shifted(j);
        }
    }
    return row[static_cast<size_t>(r)];
}

}  // namespace slweyl
