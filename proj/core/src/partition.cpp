#include "slweyl/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace slweyl {

Partition::Partition(std::vector<int> slots) {
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] < 0) {
            throw std::invalid_argument("Partition: negative part");
        }
        if (i > 0 && slots[i] > slots[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    while (!slots.empty() && slots.back() == 0) {
        slots.pop_back();
    }
    parts_ = std::move(slots);
}

long long Partition::sum() const {
    long long total = 0;
    for (int p : parts_) total += p;
    return total;
}

std::string Partition::to_string() const {
    if (parts_.empty()) {
        return "-";
    }
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    if (text == "-") {
        return {};
    }
    std::vector<int> slots;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view token(text.data() + pos,
                               (comma == std::string::npos ? text.size() : comma) - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
            throw std::invalid_argument("Partition::parse: malformed part '" +
                                        std::string(token) + "'");
        }
        slots.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(slots));
}

Partition transpose(const Partition& xi) {
    std::vector<int> cols(static_cast<size_t>(xi.largest()), 0);
    for (int p : xi.parts()) {
        for (int j = 0; j < p; ++j) {
            ++cols[static_cast<size_t>(j)];
        }
    }
    return Partition(std::move(cols));
}

long long col_partial_sum(const Partition& xi, int r) {
    if (r < 1) {
        throw std::invalid_argument("col_partial_sum: r must be positive");
    }
    Partition tr = transpose(xi);
    long long total = 0;
    int take = std::min(r, tr.num_parts());
    for (int i = 0; i < take; ++i) {
        total += tr.part(i);
    }
    return total;
}

namespace {

const std::vector<int>& require_nonempty(const Partition& xi) {
    if (xi.empty()) {
        throw std::invalid_argument("empty");
    }
    return xi.parts();
}

}  // namespace

Partition xi_plus(const Partition& xi) {
    std::vector<int> slots = require_nonempty(xi);
    size_t n = slots.size() - 1;
    if (n == 0) {
        return xi;
    }
    size_t l = 0;
    while (slots[l] != slots[n - 1]) ++l;
    slots[l] += 1;
    slots[n] -= 1;
    return Partition(std::move(slots));
}

// The three minus forms subtract the last slot from the second-to-last one
// after hat/tilde adjustments; a one-part partition degenerates to the
// empty partition in all three.

Partition xi_minus(const Partition& xi) {
    std::vector<int> slots = require_nonempty(xi);
    if (slots.size() == 1) {
        return {};
    }
    int last = slots.back();
    slots.pop_back();
    slots.back() -= last;
    return Partition(std::move(slots));
}

Partition xi_hat(const Partition& xi) {
    std::vector<int> slots = require_nonempty(xi);
    slots.back() -= 1;
    return Partition(std::move(slots));
}

Partition xi_tilde(const Partition& xi) {
    std::vector<int> slots = require_nonempty(xi);
    if (slots.back() < 2) {
        return {};
    }
    slots.back() -= 2;
    return Partition(std::move(slots));
}

Partition hat_minus(const Partition& xi) {
    std::vector<int> slots = require_nonempty(xi);
    if (slots.size() == 1) {
        return {};
    }
    int last = slots.back();
    slots.pop_back();
    slots.back() += 1 - last;
    return Partition(std::move(slots));
}

Partition tilde_minus(const Partition& xi) {
    std::vector<int> slots = require_nonempty(xi);
    if (slots.size() == 1 || slots.back() < 2) {
        // xi_tilde is already empty, and the minus of the empty partition
        // stays empty.
        return {};
    }
    int last = slots.back();
    slots.pop_back();
    slots.back() += 2 - last;
    return Partition(std::move(slots));
}

HatMinusComposites hat_minus_composites(const Partition& xi) {
    // square-tail case with xi_n >= 2: hat_minus then ends in exactly 1,
    // which the three composite formulas consume
    int p = xi.num_parts();
    if (p < 2 || xi.part(p - 2) != xi.part(p - 1) || xi.part(p - 1) < 2) {
        throw std::invalid_argument("case mismatch");
    }
    std::vector<int> inner(xi.parts().begin(), xi.parts().end() - 2);
    HatMinusComposites out;
    out.hat = Partition(inner);
    if (inner.empty()) {
        return out;
    }
    std::vector<int> minus = inner;
    minus.back() -= 1;
    out.minus = Partition(std::move(minus));
    std::vector<int> plus = inner;
    size_t l = 0;
    while (plus[l] != inner.back()) ++l;
    plus[l] += 1;
    out.plus = Partition(std::move(plus));
    return out;
}

long long lemma_bound(const Partition& xi, int r) {
    if (r < 1) {
        throw std::invalid_argument("lemma_bound: r must be positive");
    }
    const auto& parts = xi.parts();
    if (parts.empty()) {
        return 0;
    }
    std::vector<long long> suffix(parts.size() + 1, 0);
    for (size_t i = parts.size(); i-- > 0;) {
        suffix[i] = suffix[i + 1] + parts[i];
    }
    long long best = std::numeric_limits<long long>::max();
    for (size_t k = 0; k < parts.size(); ++k) {
        best = std::min(best, static_cast<long long>(k) * r + suffix[k + 1]);
    }
    return best;
}

std::vector<std::pair<int, long long>> minimal_relations(const Partition& xi) {
    std::vector<std::pair<int, long long>> out;
    for (int r = 1; r < xi.largest(); ++r) {
        out.emplace_back(r, col_partial_sum(xi, r) - r + 1);
    }
    return out;
}

namespace {

void extend_partition(std::vector<int>& current, int max_part, int remaining_rows,
                      long long remaining_sum, std::vector<Partition>& out) {
    out.push_back(Partition(current));
    if (remaining_rows == 0) {
        return;
    }
    int cap = static_cast<int>(std::min<long long>(max_part, remaining_sum));
    for (int p = 1; p <= cap; ++p) {
        current.push_back(p);
        extend_partition(current, p, remaining_rows - 1, remaining_sum - p, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("partitions_in_box: negative box");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    extend_partition(current, cols, rows, static_cast<long long>(rows) * cols, out);
    return out;
}

std::vector<Partition> partitions_bounded(int max_sum, int max_parts) {
    if (max_sum < 0 || max_parts < 0) {
        throw std::invalid_argument("partitions_bounded: negative bound");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    extend_partition(current, max_sum, max_parts, max_sum, out);
    return out;
}

}  // namespace slweyl
