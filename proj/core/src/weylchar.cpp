#include "slweyl/weylchar.hpp"

#include <array>
#include <stdexcept>

namespace slweyl {

namespace {

void append_bits(std::uint32_t mask, std::vector<int>& out) {
    out.clear();
    for (int j = 0; mask >> j; ++j) {
        if ((mask >> j) & 1u) {
            out.push_back(j);
        }
    }
}

// All weakly increasing tuples 0 <= a_1 <= ... <= a_j <= max_value for
// j = 0, 1, ... while the bound n - l - k - j stays non-negative.
void emit_a_lists(BasisTuple& t, int slack, std::vector<BasisTuple>& out) {
    out.push_back(t);
    int j = static_cast<int>(t.a.size());
    if (slack - j - 1 < 0) {
        return;
    }
    int lowest = t.a.empty() ? 0 : t.a.back();
    // Appending one entry tightens every earlier bound by one, so extending
    // is allowed only while all existing entries still fit.
    if (!t.a.empty() && t.a.back() > slack - j - 1) {
        return;
    }
    for (int value = lowest; value <= slack - j - 1; ++value) {
        t.a.push_back(value);
        emit_a_lists(t, slack, out);
        t.a.pop_back();
    }
}

}  // namespace

std::vector<BasisTuple> enumerate_basis_tuples(int n) {
    if (n < 0 || n > 30) {
        throw std::invalid_argument("enumerate_basis_tuples: parameter out of range");
    }
    std::vector<BasisTuple> out;
    std::uint32_t c_end = 1u << n;
    for (std::uint32_t cm = 0; cm < c_end; ++cm) {
        BasisTuple base;
        base.n = n;
        append_bits(cm, base.c);
        int l = static_cast<int>(base.c.size());
        std::uint32_t b_end = 1u << (n - l);
        for (std::uint32_t bm = 0; bm < b_end; ++bm) {
            BasisTuple t = base;
            append_bits(bm, t.b);
            int k = static_cast<int>(t.b.size());
            emit_a_lists(t, n - l - k, out);
        }
    }
    return out;
}

GradedCharacter character_closed(int n) {
    if (n < 0) {
        throw std::invalid_argument("character_closed: n must be non-negative");
    }
    GradedCharacter ch;
    for (int l = 0; l <= n; ++l) {
        QPolynomial ql = qbinom(n, l).shifted(l * (l - 1) / 2);
        for (int k = 0; k <= n - l; ++k) {
            QPolynomial qlk = ql * qbinom(n - l, k).shifted(k * (k - 1) / 2);
            for (int j = 0; j <= n - l - k; ++j) {
                ch.add_term({-(l + j), n - l - k - 2 * j}, qlk * qbinom(n - l - k, j));
            }
        }
    }
    return ch;
}

GradedCharacter character_from_tuples(int n) {
    GradedCharacter ch;
    for (const BasisTuple& t : enumerate_basis_tuples(n)) {
        WordWeight w = word_weight_grade(tuple_word(t));
        ch.add_term({w.h1_offset, n + w.h2_offset}, QPolynomial::monomial(w.grade));
    }
    return ch;
}

GradedCharacter character_from_superpops(int n) {
    GradedCharacter ch;
    for (const SuperPop& sp : enumerate_superpops(n)) {
        WordWeight w = word_weight_grade(superpop_word(sp));
        ch.add_term({w.h1_offset, n + w.h2_offset}, QPolynomial::monomial(w.grade));
    }
    return ch;
}

WeightVector g_character(int n) {
    if (n < 0) {
        throw std::invalid_argument("g_character: n must be non-negative");
    }
    // Convolution powers of the four-term single-box character.
    constexpr std::array<WeightKey, 4> steps{{{-1, -1}, {-1, 0}, {0, 0}, {0, 1}}};
    WeightVector acc{{WeightKey{0, 0}, BigInt(1)}};
    for (int i = 0; i < n; ++i) {
        WeightVector next;
        for (const auto& [key, mult] : acc) {
            for (const WeightKey& step : steps) {
                next[{key.du1 + step.du1, key.du2 + step.du2}] += mult;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace slweyl
