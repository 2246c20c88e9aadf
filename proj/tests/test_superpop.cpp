#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slweyl/superpop.hpp"

using namespace slweyl;

namespace {

SMatrix matrix_from_rows(const std::string& row1, const std::string& row2) {
    SMatrix m;
    m.n = static_cast<int>(row1.size());
    for (int j = 0; j < m.n; ++j) {
        if (row1[static_cast<size_t>(j)] == '1') m.row1 |= 1u << j;
        if (row2[static_cast<size_t>(j)] == '1') m.row2 |= 1u << j;
    }
    return m;
}

long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Brute-force tuple oracle: run the validity filter over a generous cross
// product of subsets and weakly increasing lists.
std::vector<std::vector<int>> weakly_increasing_lists(int max_len, int max_value) {
    std::vector<std::vector<int>> out{{}};
    std::vector<int> current;
    auto descend = [&](auto&& self, int lowest) -> void {
        if (static_cast<int>(current.size()) == max_len) return;
        for (int v = lowest; v <= max_value; ++v) {
            current.push_back(v);
            out.push_back(current);
            self(self, v);
            current.pop_back();
        }
    };
    descend(descend, 0);
    return out;
}

std::vector<BasisTuple> all_tuples_brute(int n) {
    std::vector<int> universe(static_cast<size_t>(n));
    std::vector<BasisTuple> out;
    auto subsets = [&](std::uint32_t mask) {
        std::vector<int> s;
        for (int j = 0; j < n; ++j) {
            if ((mask >> j) & 1u) s.push_back(j);
        }
        return s;
    };
    auto a_lists = weakly_increasing_lists(n, n);
    for (std::uint32_t cm = 0; cm < (1u << n); ++cm) {
        for (std::uint32_t bm = 0; bm < (1u << n); ++bm) {
            for (const auto& a : a_lists) {
                BasisTuple t{n, a, subsets(bm), subsets(cm)};
                if (t.is_valid()) {
                    out.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("matrix enumeration counts 3^n and respects the support constraint") {
    CHECK(enumerate_smatrices(0).size() == 1);
    CHECK(enumerate_smatrices(3).size() == 27);
    for (int n = 0; n <= 10; ++n) {
        auto matrices = enumerate_smatrices(n);
        CHECK(static_cast<long long>(matrices.size()) == ipow(3, n));
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        for (const SMatrix& m : matrices) {
            CHECK(m.is_valid());
            seen.emplace(m.row1, m.row2);
        }
        CHECK(seen.size() == matrices.size());
        if (n > 7) continue;

        // oracle: filter the raw 4^n cross product by the support constraint
        long long filtered = 0;
        for (std::uint32_t r1 = 0; r1 < (1u << n); ++r1) {
            for (std::uint32_t r2 = 0; r2 < (1u << n); ++r2) {
                if (SMatrix{n, r1, r2}.is_valid()) {
                    ++filtered;
                    CHECK(seen.count({r1, r2}) == 1);
                }
            }
        }
        CHECK(filtered == static_cast<long long>(matrices.size()));
    }
    CHECK_THROWS_AS(enumerate_smatrices(-1), std::invalid_argument);
}

TEST_CASE("the nine matrices for n=2") {
    std::set<std::pair<std::string, std::string>> expected = {
        {"00", "00"}, {"10", "00"}, {"01", "00"}, {"11", "00"}, {"00", "10"},
        {"10", "10"}, {"00", "01"}, {"10", "01"}, {"00", "11"},
    };
    std::set<std::pair<std::string, std::string>> actual;
    for (const SMatrix& m : enumerate_smatrices(2)) {
        actual.emplace(m.row1_string(), m.row2_string());
    }
    CHECK(actual == expected);
}

TEST_CASE("POP enumeration counts 2^N") {
    auto n0 = enumerate_pops(0);
    REQUIRE(n0.size() == 1);
    CHECK(n0[0] == Pop{0, 0, Partition{}});

    auto n1 = enumerate_pops(1);
    REQUIRE(n1.size() == 2);
    CHECK(n1[0] == Pop{1, 0, Partition{}});
    CHECK(n1[1] == Pop{1, 1, Partition{}});

    // overlays for bound 3 restricted to m=1 live in a 2 x 1 rectangle
    std::vector<Partition> overlays;
    for (const Pop& pop : enumerate_pops(3)) {
        if (pop.m == 1) overlays.push_back(pop.overlay);
    }
    CHECK(overlays == std::vector<Partition>{Partition{}, Partition({1}), Partition({1, 1})});

    for (int bound = 0; bound <= 10; ++bound) {
        auto pops = enumerate_pops(bound);
        CHECK(static_cast<long long>(pops.size()) == ipow(2, bound));
        std::set<std::pair<int, Partition>> seen;
        for (const Pop& pop : pops) {
            CHECK(pop.bound == bound);
            CHECK(pop.is_valid());
            seen.emplace(pop.m, pop.overlay);
        }
        CHECK(seen.size() == pops.size());
    }

    // oracle: filter the raw (m, overlay) cross product by the rectangle test
    for (int bound = 0; bound <= 6; ++bound) {
        std::set<std::pair<int, Partition>> direct;
        for (const Pop& pop : enumerate_pops(bound)) {
            direct.emplace(pop.m, pop.overlay);
        }
        std::set<std::pair<int, Partition>> filtered;
        for (int m = 0; m <= bound; ++m) {
            for (const Partition& overlay : partitions_in_box(bound, bound)) {
                if (Pop{bound, m, overlay}.is_valid()) {
                    filtered.emplace(m, overlay);
                }
            }
        }
        CHECK(filtered == direct);
    }
}

TEST_CASE("super POP enumeration counts 4^n") {
    CHECK(enumerate_superpops(0).size() == 1);
    CHECK(enumerate_superpops(2).size() == 16);
    CHECK(enumerate_superpops(4).size() == 256);
    for (int n = 0; n <= 8; ++n) {
        auto superpops = enumerate_superpops(n);
        CHECK(static_cast<long long>(superpops.size()) == ipow(4, n));
        for (const SuperPop& sp : superpops) {
            CHECK(sp.is_valid());
        }
    }
    // without materializing: sum of 2^(n - s(A)) over admissible matrices
    for (int n = 9; n <= 10; ++n) {
        long long total = 0;
        for (const SMatrix& m : enumerate_smatrices(n)) {
            total += ipow(2, n - m.entry_sum());
        }
        CHECK(total == ipow(4, n));
    }
}

TEST_CASE("bijection pinned values") {
    // matrix with a single x1 one in column 2, bound 3, m=1, overlay (1)
    SuperPop sp{matrix_from_rows("0100", "0000"), Pop{3, 1, Partition({1})}};
    REQUIRE(sp.is_valid());
    BasisTuple t = superpop_to_tuple(sp);
    CHECK(t == BasisTuple{4, {0, 1}, {1}, {}});
    CHECK(tuple_to_superpop(t) == sp);

    SuperPop zero{matrix_from_rows("00", "00"), Pop{2, 2, Partition{}}};
    CHECK(superpop_to_tuple(zero) == BasisTuple{2, {}, {}, {}});
    CHECK(tuple_to_superpop(BasisTuple{2, {}, {}, {}}) == zero);

    SuperPop both_x1{matrix_from_rows("11", "00"), Pop{0, 0, Partition{}}};
    CHECK(superpop_to_tuple(both_x1) == BasisTuple{2, {}, {0, 1}, {}});

    SuperPop both_y3{matrix_from_rows("00", "11"), Pop{0, 0, Partition{}}};
    CHECK(tuple_to_superpop(BasisTuple{2, {}, {}, {0, 1}}) == both_y3);
}

TEST_CASE("bijection roundtrips exhaustively to n=6") {
    for (int n = 0; n <= 6; ++n) {
        std::set<BasisTuple> images;
        for (const SuperPop& sp : enumerate_superpops(n)) {
            BasisTuple t = superpop_to_tuple(sp);
            CHECK(t.is_valid());
            CHECK(tuple_to_superpop(t) == sp);
            images.insert(t);
        }
        // image is exactly the brute-force tuple set, and the reverse
        // composite is the identity on it
        auto brute = all_tuples_brute(n);
        CHECK(images.size() == brute.size());
        for (const BasisTuple& t : brute) {
            CHECK(images.count(t) == 1);
            CHECK(superpop_to_tuple(tuple_to_superpop(t)) == t);
        }
    }
}

TEST_CASE("words") {
    SMatrix A = matrix_from_rows("0100", "0000");
    CHECK(superpop_word({A, Pop{3, 1, Partition{}}}).to_string() == "y2[0] y2[0] x1[1]");
    CHECK(superpop_word({A, Pop{3, 1, Partition({1})}}).to_string() == "y2[0] y2[1] x1[1]");
    CHECK(superpop_word({A, Pop{3, 1, Partition({1, 1})}}).to_string() == "y2[1] y2[1] x1[1]");
    CHECK(tuple_word(BasisTuple{2, {}, {}, {}}).to_string() == "1");

    for (int n = 0; n <= 6; ++n) {
        for (const SuperPop& sp : enumerate_superpops(n)) {
            PbwWord w = superpop_word(sp);
            CHECK(w.is_canonical());
            CHECK(w == tuple_word(superpop_to_tuple(sp)));
        }
    }
}

TEST_CASE("n=2 matrix/POP pairs map to the pinned words in enumeration order") {
    auto words_for = [](const std::string& row1, const std::string& row2) {
        SMatrix A = matrix_from_rows(row1, row2);
        std::vector<std::string> words;
        for (const Pop& pop : enumerate_pops(A.n - A.entry_sum())) {
            words.push_back(superpop_word({A, pop}).to_string());
        }
        return words;
    };
    CHECK(words_for("00", "00") ==
          std::vector<std::string>{"y2[0] y2[0]", "y2[0]", "y2[1]", "1"});
    CHECK(words_for("10", "00") == std::vector<std::string>{"y2[0] x1[0]", "x1[0]"});
    CHECK(words_for("01", "00") == std::vector<std::string>{"y2[0] x1[1]", "x1[1]"});
    CHECK(words_for("00", "10") == std::vector<std::string>{"y2[0] y3[0]", "y3[0]"});
    CHECK(words_for("11", "00") == std::vector<std::string>{"x1[0] x1[1]"});
    CHECK(words_for("00", "11") == std::vector<std::string>{"y3[0] y3[1]"});
    CHECK(words_for("10", "01") == std::vector<std::string>{"x1[0] y3[1]"});
}

TEST_CASE("word weight and grade") {
    CHECK(word_weight_grade(PbwWord{}) == WordWeight{0, 0, 0});

    PbwWord w{{{Generator::y2, 0}, {Generator::y2, 1}, {Generator::x1, 1}}};
    CHECK(word_weight_grade(w) == WordWeight{-2, -5, 2});

    PbwWord y3_only{{{Generator::y3, 0}}};
    WordWeight ww = word_weight_grade(y3_only);
    CHECK(ww == WordWeight{-1, -1, 0});
    CHECK(2 + ww.h2_offset == 1);  // absolute h2-weight at n=2
}

TEST_CASE("canonical order predicate") {
    CHECK(PbwWord{}.is_canonical());
    CHECK_FALSE(PbwWord{{{Generator::x1, 0}, {Generator::y2, 0}}}.is_canonical());
    CHECK_FALSE(PbwWord{{{Generator::y2, 2}, {Generator::y2, 1}}}.is_canonical());
    CHECK_FALSE(PbwWord{{{Generator::y3, 1}, {Generator::y3, 1}}}.is_canonical());
    CHECK(PbwWord{{{Generator::y2, 1}, {Generator::y2, 1}, {Generator::y3, 1}}}.is_canonical());
}

TEST_CASE("super POP JSON") {
    SuperPop sp{matrix_from_rows("0100", "0000"), Pop{3, 1, Partition({1})}};
    CHECK(to_json(sp) == "{\"n\":4,\"row1\":\"0100\",\"row2\":\"0000\",\"m\":1,\"overlay\":[1]}");
}
