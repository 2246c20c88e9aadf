#pragma once

#include <compare>
#include <map>
#include <string>

#include "slweyl/qpolynomial.hpp"

namespace slweyl {

/// Bigraded weight of a character term.
///
/// du1 is the u1-exponent measured as an offset from the formal highest
/// weight psi(h1): the h1-eigenvalue of a highest weight vector need not be
/// an integer, so it is never materialized. du2 is the absolute u2-exponent
/// (h2-eigenvalues are genuine integers).
struct WeightKey {
    int du1 = 0;
    int du2 = 0;
    auto operator<=>(const WeightKey&) const = default;
};

/// Sparse bigraded character: finite map from weights to q-polynomials.
/// Zero polynomials are never stored.
class GradedCharacter {
public:
    using TermMap = std::map<WeightKey, QPolynomial>;

    GradedCharacter() = default;

    /// Add p to the coefficient of u1^{psi(h1)+du1} u2^{du2}, pruning zeros.
    void add_term(WeightKey key, const QPolynomial& p);

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    bool operator==(const GradedCharacter&) const = default;

private:
    TermMap terms_;
};

/// Integer-valued weight multiplicities (a character with q specialized away).
using WeightVector = std::map<WeightKey, BigInt>;

GradedCharacter char_add(const GradedCharacter& a, const GradedCharacter& b);

/// Multiply every term by p * q^dq and shift its weight by (du1, du2).
/// dq must be non-negative.
GradedCharacter char_scale(const GradedCharacter& a, const QPolynomial& p, int du1, int du2,
                           int dq);

/// Evaluate every q-polynomial at q = 1.
WeightVector specialize_q1(const GradedCharacter& a);

/// Sum of all coefficients of all terms; the dimension of the graded module.
BigInt total_dimension(const GradedCharacter& a);

/// Largest q-exponent appearing in any term; -1 for the empty character.
int max_q_exponent(const GradedCharacter& a);

/// Machine format: a JSON list of records {du1, du2, poly: [[exp, coeff], ...]}
/// with coefficients as decimal strings, sorted by (du1, du2, exp).
std::string to_json(const GradedCharacter& a);

/// CSV with header du1,du2,q_exponent,coefficient, same sort order.
std::string to_csv(const GradedCharacter& a);

}  // namespace slweyl
