#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slweyl/partition.hpp"

namespace slweyl {

/// 2 x n matrix over Z_2 with rows stored as bitmasks (bit j-1 <-> column j).
/// Row 1 marks x1 factors, row 2 marks y3 factors. Membership in the
/// admissible set requires row 1 to vanish on every column past
/// n - (number of ones in row 2).
struct SMatrix {
    int n = 0;
    std::uint32_t row1 = 0;
    std::uint32_t row2 = 0;

    int ones_row1() const;
    int ones_row2() const;
    /// s(A): total number of ones.
    int entry_sum() const { return ones_row1() + ones_row2(); }
    bool is_valid() const;

    /// 1-based columns carrying a one, ascending.
    std::vector<int> columns_row1() const;
    std::vector<int> columns_row2() const;

    /// "0100" for row bits of columns 1..n.
    std::string row1_string() const;
    std::string row2_string() const;

    bool operator==(const SMatrix&) const = default;
};

/// Partition overlaid pattern with bounding sequence `bound >= 0`: a
/// Gelfand-Tsetlin middle entry 0 <= m <= bound together with a partition
/// overlay inside the rectangle with (bound - m) rows and m columns.
struct Pop {
    int bound = 0;
    int m = 0;
    Partition overlay;

    bool is_valid() const;
    bool operator==(const Pop&) const = default;
};

/// A matrix from the admissible set together with a POP whose bounding
/// sequence is n - s(A).
struct SuperPop {
    SMatrix matrix;
    Pop pop;

    bool is_valid() const;
    bool operator==(const SuperPop&) const = default;
};

/// Degree tuple (a; b; c) of a normal-ordered basis monomial:
/// a = y2 degrees, weakly increasing; b = x1 degrees and c = y3 degrees,
/// strictly increasing (odd generators square to zero), subject to
///   0 <= c_1 < ... < c_l <= n-1
///   0 <= b_1 < ... < b_k <= n-l-1
///   0 <= a_1 <= ... <= a_j <= n-l-k-j.
struct BasisTuple {
    int n = 0;
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> c;

    bool is_valid() const;
    bool operator==(const BasisTuple&) const = default;
    auto operator<=>(const BasisTuple&) const = default;
};

enum class Generator { y2, x1, y3 };

struct PbwFactor {
    Generator gen = Generator::y2;
    int degree = 0;
    bool operator==(const PbwFactor&) const = default;
};

/// Normal-ordered monomial word: the y2 block (weakly increasing degrees),
/// then the x1 block, then the y3 block (strictly increasing degrees each).
struct PbwWord {
    std::vector<PbwFactor> factors;

    bool is_canonical() const;
    /// "y2[0] y2[1] x1[1]"; the empty word prints as "1".
    std::string to_string() const;

    bool operator==(const PbwWord&) const = default;
};

/// Weight and grade of a word relative to the highest weight (psi(h1), n).
/// Each y2 contributes (-1, -2), each x1 (0, -1), each y3 (-1, -1) to the
/// (h1, h2) offsets; the grade is the total t-degree.
struct WordWeight {
    int h1_offset = 0;
    int h2_offset = 0;
    int grade = 0;
    bool operator==(const WordWeight&) const = default;
};

/// Complete duplicate-free enumerations. Counts are 3^n, 2^bound and 4^n.
std::vector<SMatrix> enumerate_smatrices(int n);
std::vector<Pop> enumerate_pops(int bound);
std::vector<SuperPop> enumerate_superpops(int n);

/// The bijection between super POPs with parameter n and degree tuples:
/// c and b list the 1-based columns of rows 2 and 1 shifted down by one,
/// and a is the overlay read weakly increasing, front-padded with zeros to
/// length bound - m. The two maps are mutually inverse.
BasisTuple superpop_to_tuple(const SuperPop& sp);
SuperPop tuple_to_superpop(const BasisTuple& t);

PbwWord superpop_word(const SuperPop& sp);
PbwWord tuple_word(const BasisTuple& t);

WordWeight word_weight_grade(const PbwWord& w);

/// {"n":4,"row1":"0100","row2":"0000","m":1,"overlay":[1]}
std::string to_json(const SuperPop& sp);

}  // namespace slweyl
