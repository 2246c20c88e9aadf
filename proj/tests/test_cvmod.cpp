#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "slweyl/cvmod.hpp"
#include "slweyl/weylchar.hpp"

using namespace slweyl;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

std::vector<BigInt> quotient_dims(const Partition& xi) {
    return verify_filtration(CVIndex{0, xi}).quotient_dims;
}

}  // namespace

TEST_CASE("dimension formulas") {
    CHECK(cv_dim(P({1, 1, 1})) == 64);
    CHECK(cv_dim(P({4})) == 16);
    CHECK(cv_dim(P({3, 2})) == 96);
    CHECK(cv_dim(Partition{}) == 1);
    CHECK(cv_dim(CVIndex{-3, P({3, 2})}) == 96);

    CHECK(kac_dim(3) == 12);
    CHECK(kac_dim(0) == 1);
    CHECK(kac_dim(7) == 28);
    CHECK_THROWS_AS(kac_dim(-1), std::invalid_argument);

    CHECK(fusion_dim(P({3, 2})) == 96);
    CHECK(fusion_dim(P({1})) == 4);
    CHECK(fusion_dim(P({2, 2, 2})) == 512);
}

TEST_CASE("fusion and product dimensions coincide") {
    for (const Partition& xi : partitions_bounded(15, 6)) {
        CHECK(fusion_dim(xi) == cv_dim(xi));
    }
}

TEST_CASE("boundary identities with Weyl and Kac modules") {
    for (int m = 0; m <= 8; ++m) {
        Partition column(std::vector<int>(static_cast<size_t>(m), 1));
        CHECK(cv_dim(column) == total_dimension(character_closed(m)));
        Partition row = m == 0 ? Partition{} : P({m});
        CHECK(cv_dim(row) == kac_dim(m));
    }
}

TEST_CASE("kernel filtration quotient lists") {
    // two distinct tail parts: four quotients
    auto b = kernel_filtration(CVIndex{0, P({3, 2})});
    REQUIRE(b.size() == 4);
    CHECK(b[0] == FiltrationQuotient{2, 2, P({1})});
    CHECK(b[1] == FiltrationQuotient{2, 1, P({2})});
    CHECK(b[2] == FiltrationQuotient{2, 2, P({2})});
    CHECK(b[3] == FiltrationQuotient{2, 1, P({3})});
    CHECK(quotient_dims(P({3, 2})) == std::vector<BigInt>{4, 8, 8, 12});

    // square two-row case: three quotients
    auto a = kernel_filtration(CVIndex{0, P({2, 2})});
    REQUIRE(a.size() == 3);
    CHECK(a[0] == FiltrationQuotient{2, 1, P({1})});
    CHECK(a[1] == FiltrationQuotient{2, 2, P({1})});
    CHECK(a[2] == FiltrationQuotient{2, 1, P({2})});
    CHECK(quotient_dims(P({2, 2})) == std::vector<BigInt>{4, 4, 8});

    // square tail with n >= 2: six quotients, two with the extra shift
    auto c = kernel_filtration(CVIndex{0, P({2, 2, 2})});
    REQUIRE(c.size() == 6);
    CHECK(c[0] == FiltrationQuotient{4, 2, P({2})});
    CHECK(c[1] == FiltrationQuotient{4, 1, P({3})});
    CHECK(c[2] == FiltrationQuotient{5, 2, P({1})});
    CHECK(c[3] == FiltrationQuotient{5, 1, P({2})});
    CHECK(c[4] == FiltrationQuotient{4, 2, P({2, 1})});
    CHECK(c[5] == FiltrationQuotient{4, 1, P({2, 2})});
    CHECK(quotient_dims(P({2, 2, 2})) == std::vector<BigInt>{8, 12, 4, 8, 32, 64});

    // unit tail parts drop the tilde quotient
    auto unit_tail = kernel_filtration(CVIndex{0, P({5, 1})});
    REQUIRE(unit_tail.size() == 3);
    CHECK(unit_tail[0] == FiltrationQuotient{1, 1, P({4})});
    CHECK(unit_tail[1] == FiltrationQuotient{1, 0, P({5})});
    CHECK(unit_tail[2] == FiltrationQuotient{1, 1, P({5})});
    auto square_unit = kernel_filtration(CVIndex{0, P({1, 1})});
    REQUIRE(square_unit.size() == 2);
    CHECK(square_unit[0] == FiltrationQuotient{1, 0, P({1})});
    CHECK(square_unit[1] == FiltrationQuotient{1, 1, P({1})});
}

TEST_CASE("uncovered cases raise instead of guessing") {
    CHECK_THROWS_AS(kernel_filtration(CVIndex{0, P({1, 1, 1})}), UncoveredCaseError);
    CHECK_THROWS_AS(kernel_filtration(CVIndex{0, P({2, 1, 1})}), UncoveredCaseError);
    CHECK_THROWS_AS(kernel_filtration(CVIndex{0, P({4})}), UncoveredCaseError);
    CHECK_THROWS_AS(kernel_filtration(CVIndex{0, Partition{}}), UncoveredCaseError);
    CHECK_THROWS_WITH(kernel_filtration(CVIndex{0, P({1, 1, 1})}), "uncovered-case");
}

TEST_CASE("filtration reports balance exactly") {
    FiltrationReport r = verify_filtration(CVIndex{0, P({5, 1})});
    CHECK(r.balanced);
    CHECK(r.xi_plus == P({6}));
    CHECK(r.dim == 80);
    CHECK(r.dim_plus == 24);
    CHECK(r.quotient_dims == std::vector<BigInt>{16, 20, 20});
    CHECK(r.kernel_generator == KernelGenerator{1, 1});

    FiltrationReport s = verify_filtration(CVIndex{0, P({3, 2})});
    CHECK(s.balanced);
    CHECK(s.kernel_generator == KernelGenerator{1, 2});
    CHECK(s.dim - s.dim_plus == 32);

    FiltrationReport t = verify_filtration(CVIndex{0, P({2, 2, 2})});
    CHECK(t.balanced);
    CHECK(t.kernel_generator == KernelGenerator{2, 2});
    CHECK(t.dim - t.dim_plus == 128);

    // kernel generator degree is the last slot index and its power the last part
    for (const Partition& xi : partitions_bounded(10, 4)) {
        if (xi.num_parts() < 2) continue;
        try {
            FiltrationReport report = verify_filtration(CVIndex{0, xi});
            CHECK(report.kernel_generator ==
                  KernelGenerator{xi.num_parts() - 1, xi.smallest()});
        } catch (const UncoveredCaseError&) {
        }
    }
}

TEST_CASE("filtration sweep") {
    SweepSummary sweep = verify_filtration_sweep(12, 5);
    CHECK(sweep.unbalanced == 0);
    CHECK(sweep.failures.empty());
    CHECK(sweep.balanced == sweep.covered);
    CHECK(sweep.balanced > 0);

    SweepSummary small = verify_filtration_sweep(2, 2);
    CHECK(small.covered == 1);    // only (1,1)
    CHECK(small.balanced == 1);
    CHECK(small.uncovered == 2);  // (1) and (2)

    SweepSummary empty = verify_filtration_sweep(0, 0);
    CHECK(empty.covered == 0);
    CHECK(empty.balanced == 0);
    CHECK(empty.uncovered == 0);
}

TEST_CASE("report JSON") {
    CHECK(to_json(verify_filtration(CVIndex{0, P({3, 2})})) ==
          "{\"xi\":\"3,2\",\"xi_plus\":\"4,1\",\"dim\":\"96\",\"dim_plus\":\"64\","
          "\"quotients\":["
          "{\"shift\":2,\"f_shift\":2,\"xi\":\"1\",\"dim\":\"4\"},"
          "{\"shift\":2,\"f_shift\":1,\"xi\":\"2\",\"dim\":\"8\"},"
          "{\"shift\":2,\"f_shift\":2,\"xi\":\"2\",\"dim\":\"8\"},"
          "{\"shift\":2,\"f_shift\":1,\"xi\":\"3\",\"dim\":\"12\"}"
          "],\"balanced\":true}");
}
