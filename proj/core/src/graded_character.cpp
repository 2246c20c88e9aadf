#include "slweyl/graded_character.hpp"

#include <algorithm>

namespace slweyl {

void GradedCharacter::add_term(WeightKey key, const QPolynomial& p) {
    if (p.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(key, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

GradedCharacter char_add(const GradedCharacter& a, const GradedCharacter& b) {
    GradedCharacter out = a;
    for (const auto& [key, poly] : b.terms()) {
        out.add_term(key, poly);
    }
    return out;
}

GradedCharacter char_scale(const GradedCharacter& a, const QPolynomial& p, int du1, int du2,
                           int dq) {
    GradedCharacter out;
    QPolynomial factor = p.shifted(dq);
    for (const auto& [key, poly] : a.terms()) {
        out.add_term({key.du1 + du1, key.du2 + du2}, poly * factor);
    }
    return out;
}

WeightVector specialize_q1(const GradedCharacter& a) {
    WeightVector out;
    for (const auto& [key, poly] : a.terms()) {
        BigInt value = poly.eval_at_one();
        if (value != 0) {
            out.emplace(key, std::move(value));
        }
    }
    return out;
}

BigInt total_dimension(const GradedCharacter& a) {
    BigInt total = 0;
    for (const auto& [key, poly] : a.terms()) {
        total += poly.eval_at_one();
    }
    return total;
}

int max_q_exponent(const GradedCharacter& a) {
    int top = -1;
    for (const auto& [key, poly] : a.terms()) {
        top = std::max(top, poly.degree());
    }
    return top;
}

std::string to_json(const GradedCharacter& a) {
    std::string out = "[";
    bool first_term = true;
    for (const auto& [key, poly] : a.terms()) {
        if (!first_term) out += ",";
        first_term = false;
        out += "{\"du1\":" + std::to_string(key.du1) + ",\"du2\":" + std::to_string(key.du2) +
               ",\"poly\":[";
        bool first_mono = true;
        for (const auto& [exp, coeff] : poly.coefficients()) {
            if (!first_mono) out += ",";
            first_mono = false;
            out += "[" + std::to_string(exp) + ",\"" + coeff.get_str() + "\"]";
        }
        out += "]}";
    }
    out += "]";
    return out;
}

std::string to_csv(const GradedCharacter& a) {
    std::string out = "du1,du2,q_exponent,coefficient\n";
    for (const auto& [key, poly] : a.terms()) {
        for (const auto& [exp, coeff] : poly.coefficients()) {
            out += std::to_string(key.du1) + "," + std::to_string(key.du2) + "," +
                   std::to_string(exp) + "," + coeff.get_str() + "\n";
        }
    }
    return out;
}

}  // namespace slweyl
