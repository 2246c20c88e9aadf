#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace slweyl {

/// Integer partition: weakly decreasing positive parts, no trailing zeros
/// stored. The empty partition is a first-class value.
class Partition {
public:
    Partition() = default;

    /// Accepts a weakly decreasing slot list; zero slots are stripped.
    /// Throws std::invalid_argument on negative or out-of-order entries.
    explicit Partition(std::vector<int> slots);

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    long long sum() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// "3,2,1"; the empty partition prints as "-".
    std::string to_string() const;

    /// Inverse of to_string. Throws std::invalid_argument on malformed input.
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

/// Conjugate Young diagram (rows and columns exchanged). Involutive.
Partition transpose(const Partition& xi);

/// Sum of the first r columns of the diagram, i.e. the sum of the first
/// r parts of transpose(xi). Requires r >= 1.
long long col_partial_sum(const Partition& xi, int r);

/*
 * Partition surgery on xi = (xi_0 >= ... >= xi_n > 0).
 *
 * The composite operations below are evaluated on the unstripped
 * (n+1)-slot sequence and only then canonicalized, because the hat
 * operation leaves an explicit ">= 0" slot that a subsequent minus
 * consumes:
 *
 *   xi_plus      increments the earliest part equal to xi_{n-1} and
 *                decrements the last part; size is preserved.
 *   xi_hat       decrements the last part.
 *   xi_tilde     decrements the last part by 2 (empty when xi_n = 1).
 *   xi_minus     (xi_0, ..., xi_{n-2}, xi_{n-1} - xi_n)
 *   hat_minus    (xi_0, ..., xi_{n-2}, xi_{n-1} - xi_n + 1)
 *   tilde_minus  (xi_0, ..., xi_{n-2}, xi_{n-1} - xi_n + 2)
 *
 * For a one-part partition, xi_plus is the identity and the three minus
 * forms all degenerate to the empty partition. All of them reject the
 * empty partition with std::invalid_argument("empty").
 */
Partition xi_plus(const Partition& xi);
Partition xi_minus(const Partition& xi);
Partition xi_hat(const Partition& xi);
Partition xi_tilde(const Partition& xi);
Partition hat_minus(const Partition& xi);
Partition tilde_minus(const Partition& xi);

struct HatMinusComposites {
    Partition hat;    // (xi_0, ..., xi_{n-2})
    Partition minus;  // (xi_0, ..., xi_{n-2} - 1)
    Partition plus;   // (xi_0, ..., xi_l + 1, ..., xi_{n-2}), l minimal with xi_l = xi_{n-2}
};

/// The hat/minus/plus composites of hat_minus(xi) in the square-tail case
/// xi_{n-1} = xi_n >= 2, computed on the slot list (xi_0, ..., xi_{n-2}).
/// Throws std::invalid_argument("case mismatch") outside that case.
HatMinusComposites hat_minus_composites(const Partition& xi);

/// min over 0 <= k <= n of (k*r + xi_{k+1} + ... + xi_n); the Garland
/// relations y2(r, s) hold exactly for s strictly above this bound.
/// Requires r >= 1. Returns 0 for the empty partition.
long long lemma_bound(const Partition& xi, int r);

/// Minimal generating relations (r, s) with s = col_partial_sum(xi, r) - r + 1,
/// for r = 1, ..., largest part - 1.
std::vector<std::pair<int, long long>> minimal_relations(const Partition& xi);

/// All partitions with at most `rows` parts, each part at most `cols`,
/// in lexicographic order starting from the empty partition.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// All partitions with sum <= max_sum and at most max_parts parts,
/// including the empty partition, in lexicographic order.
std::vector<Partition> partitions_bounded(int max_sum, int max_parts);

/// Index of a Chari-Venkatesh module V(xi): the partition together with the
/// integer offset of lambda_1 from its formal baseline (lambda_1 itself is an
/// arbitrary complex parameter and is never materialized).
struct CVIndex {
    long long lambda1_offset = 0;
    Partition xi;

    bool operator==(const CVIndex&) const = default;
};

}  // namespace slweyl
