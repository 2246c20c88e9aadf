#include "slweyl/checks.hpp"

#include "slweyl/cvmod.hpp"
#include "slweyl/weylchar.hpp"

namespace slweyl::checks {

namespace {

BigInt pow4(int n) {
    BigInt out = 1;
    for (int i = 0; i < n; ++i) out *= 4;
    return out;
}

}  // namespace

CheckResult check_counting(int max_n) {
    CheckResult result{"counting", true, ""};
    for (int n = 0; n <= max_n; ++n) {
        BigInt expected = pow4(n);
        BigInt tuples = static_cast<long>(enumerate_basis_tuples(n).size());
        BigInt superpops = static_cast<long>(enumerate_superpops(n).size());
        if (tuples != expected || superpops != expected) {
            result.passed = false;
            result.detail = "n=" + std::to_string(n) + ": tuples=" + tuples.get_str() +
                            " superpops=" + superpops.get_str() + " expected=" +
                            expected.get_str();
            return result;
        }
    }
    result.detail = "counts equal 4^n for n=0.." + std::to_string(max_n);
    return result;
}

CheckResult check_characters(int max_n) {
    CheckResult result{"characters", true, ""};
    for (int n = 0; n <= max_n; ++n) {
        GradedCharacter closed = character_closed(n);
        if (closed != character_from_tuples(n)) {
            result.passed = false;
            result.detail = "n=" + std::to_string(n) + ": closed form != tuple enumeration";
            return result;
        }
        if (closed != character_from_superpops(n)) {
            result.passed = false;
            result.detail = "n=" + std::to_string(n) + ": closed form != super POP enumeration";
            return result;
        }
        if (specialize_q1(closed) != g_character(n)) {
            result.passed = false;
            result.detail = "n=" + std::to_string(n) + ": q->1 specialization != g-character";
            return result;
        }
    }
    result.detail = "three routes and the q->1 specialization agree for n=0.." +
                    std::to_string(max_n);
    return result;
}

CheckResult check_bijection(int max_n) {
    CheckResult result{"bijection", true, ""};
    for (int n = 0; n <= max_n; ++n) {
        for (const SuperPop& sp : enumerate_superpops(n)) {
            BasisTuple t = superpop_to_tuple(sp);
            if (tuple_to_superpop(t) != sp) {
                result.passed = false;
                result.detail = "n=" + std::to_string(n) +
                                ": roundtrip failed at super POP " + to_json(sp);
                return result;
            }
            if (superpop_word(sp) != tuple_word(t)) {
                result.passed = false;
                result.detail = "n=" + std::to_string(n) + ": word mismatch at super POP " +
                                to_json(sp);
                return result;
            }
        }
        for (const BasisTuple& t : enumerate_basis_tuples(n)) {
            if (superpop_to_tuple(tuple_to_superpop(t)) != t) {
                result.passed = false;
                result.detail = "n=" + std::to_string(n) + ": reverse roundtrip failed at word " +
                                tuple_word(t).to_string();
                return result;
            }
        }
    }
    result.detail = "both roundtrips are the identity for n=0.." + std::to_string(max_n);
    return result;
}

CheckResult check_filtration_sweep(int max_size, int max_parts) {
    CheckResult result{"filtration_sweep", true, ""};
    SweepSummary summary = verify_filtration_sweep(max_size, max_parts);
    if (summary.unbalanced != 0) {
        result.passed = false;
        result.detail = "unbalanced at xi=" + summary.failures.front();
        return result;
    }
    result.detail = std::to_string(summary.balanced) + " covered partitions balanced, " +
                    std::to_string(summary.uncovered) + " uncovered";
    return result;
}

CheckResult check_thresholds(int max_size) {
    CheckResult result{"thresholds", true, ""};
    long long count = 0;
    for (const Partition& xi : partitions_bounded(max_size, max_size)) {
        if (xi.empty()) {
            continue;
        }
        for (const auto& [r, s] : minimal_relations(xi)) {
            if (s != lemma_bound(xi, r) + 1) {
                result.passed = false;
                result.detail = "xi=" + xi.to_string() + " r=" + std::to_string(r) +
                                ": s=" + std::to_string(s) + " but bound+1=" +
                                std::to_string(lemma_bound(xi, r) + 1);
                return result;
            }
            ++count;
        }
    }
    result.detail = std::to_string(count) + " relation thresholds match the minimized bound";
    return result;
}

std::vector<CheckResult> run_all(int max_n, int max_size, int max_parts) {
    return {
        check_counting(max_n),
        check_characters(max_n),
        check_bijection(max_n),
        check_filtration_sweep(max_size, max_parts),
        check_thresholds(20),
    };
}

}  // namespace slweyl::checks
