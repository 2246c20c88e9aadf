#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "slweyl/bigint.hpp"
#include "slweyl/partition.hpp"

namespace slweyl {

// Dimension calculus of Chari-Venkatesh modules V(xi) for sl(1|2)[t]:
// the product dimension formula, generalized Kac and fusion dimensions,
// and the kernel filtration of the short exact sequence
//   0 -> Ker phi -> V(xi) -> V(xi_plus) -> 0.

/// dim V(xi) = 4^{#parts} * (product of parts); the empty partition gives 1.
///
/// The product formula is proven exactly for the covered filtration cases
/// and is a lower bound in general; kernel_filtration refuses the uncovered
/// cases rather than reporting unverified structure.
BigInt cv_dim(const Partition& xi);
BigInt cv_dim(const CVIndex& idx);

/// dim K(lambda) = 4 * lambda_2 for lambda_2 >= 1; the trivial module for 0.
BigInt kac_dim(long long lambda2);

/// Dimension of the fusion product of generalized Kac modules
/// K(a_0, xi_0) * ... * K(a_n, xi_n): the product of the factor dimensions.
BigInt fusion_dim(const Partition& xi);

/// One layer of the kernel filtration: the quotient is a grade-shifted CV
/// module tau_{grade_shift} V(f_{f_shift}(xi)), where f shifts lambda_1.
struct FiltrationQuotient {
    long long grade_shift = 0;
    long long f_shift = 0;
    Partition xi;

    bool operator==(const FiltrationQuotient&) const = default;
};

/// Ker phi is generated by (y2 (x) t^degree)^power applied to the generator.
struct KernelGenerator {
    int degree = 0;
    int power = 0;
    bool operator==(const KernelGenerator&) const = default;
};

struct FiltrationReport {
    CVIndex input;
    Partition xi_plus;
    std::vector<FiltrationQuotient> quotients;
    KernelGenerator kernel_generator;
    std::vector<BigInt> quotient_dims;
    BigInt dim;
    BigInt dim_plus;
    bool balanced = false;
};

/// The filtration hypotheses do not cover: partitions with fewer than two
/// parts, and tails xi_{n-1} = xi_n = 1 with n >= 2. Those inputs raise this
/// error instead of a silent wrong answer.
class UncoveredCaseError : public std::runtime_error {
public:
    UncoveredCaseError() : std::runtime_error("uncovered-case") {}
};

/// Kernel filtration quotients of the short exact sequence, by case:
///   (A) n = 1 with xi_0 = xi_1: three quotients (two when xi_0 = 1);
///   (B) xi_{n-1} > xi_n: four quotients (three when xi_n = 1);
///   (C) xi_{n-1} = xi_n >= 2, n >= 2: six quotients.
/// Throws UncoveredCaseError otherwise.
std::vector<FiltrationQuotient> kernel_filtration(const CVIndex& idx);

/// Expands the filtration and checks the exact dimension balance
///   dim V(xi) = dim V(xi_plus) + sum of quotient dimensions.
FiltrationReport verify_filtration(const CVIndex& idx);

struct SweepSummary {
    int max_size = 0;
    int max_parts = 0;
    long long covered = 0;
    long long balanced = 0;
    long long unbalanced = 0;
    long long uncovered = 0;
    /// to_string() of every unbalanced partition, in sweep order.
    std::vector<std::string> failures;
};

/// Runs verify_filtration over every nonempty partition with sum <= max_size
/// and at most max_parts parts.
SweepSummary verify_filtration_sweep(int max_size, int max_parts);

/// {"xi":"3,2","xi_plus":"4,1","dim":"96","dim_plus":"64",
///  "quotients":[{"shift":2,"f_shift":2,"xi":"1","dim":"4"},...],"balanced":true}
std::string to_json(const FiltrationReport& report);

}  // namespace slweyl
