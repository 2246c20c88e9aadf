#pragma once

#include <string>
#include <vector>

namespace slweyl::checks {

// Self-verification sections shared by the `verify` CLI command. Each check
// recomputes its claim from scratch through independent routes and reports
// the first counterexample on failure.

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Basis tuples and super POPs both number exactly 4^n for 0 <= n <= max_n.
CheckResult check_counting(int max_n);

/// character_closed, character_from_tuples and character_from_superpops agree
/// exactly, and their q -> 1 specialization equals g_character.
CheckResult check_characters(int max_n);

/// superpop_to_tuple and tuple_to_superpop are mutually inverse on all
/// objects with parameter <= max_n, and both routes yield the same word.
CheckResult check_bijection(int max_n);

/// verify_filtration_sweep(max_size, max_parts) reports no imbalance.
CheckResult check_filtration_sweep(int max_size, int max_parts);

/// Every minimal relation (r, s) of every partition of size <= max_size
/// satisfies s = lemma_bound(xi, r) + 1.
CheckResult check_thresholds(int max_size);

/// All five sections in a fixed order. Thresholds are always checked up to
/// size 20 regardless of max_size, which only bounds the filtration sweep.
std::vector<CheckResult> run_all(int max_n, int max_size, int max_parts);

}  // namespace slweyl::checks
