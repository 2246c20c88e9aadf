#include "slweyl/cvmod.hpp"

namespace slweyl {

BigInt cv_dim(const Partition& xi) {
    BigInt dim = 1;
    for (int p : xi.parts()) {
        dim *= 4 * BigInt(p);
    }
    return dim;
}

BigInt cv_dim(const CVIndex& idx) {
    return cv_dim(idx.xi);
}

BigInt kac_dim(long long lambda2) {
    if (lambda2 < 0) {
        throw std::invalid_argument("kac_dim: lambda2 must be non-negative");
    }
    return lambda2 == 0 ? BigInt(1) : BigInt(4) * to_bigint(lambda2);
}

BigInt fusion_dim(const Partition& xi) {
    BigInt dim = 1;
    for (int p : xi.parts()) {
        dim *= kac_dim(p);
    }
    return dim;
}

std::vector<FiltrationQuotient> kernel_filtration(const CVIndex& idx) {
    const Partition& xi = idx.xi;
    int p = xi.num_parts();
    if (p < 2) {
        throw UncoveredCaseError();
    }
    int n = p - 1;
    int last = xi.part(n);
    int second_last = xi.part(n - 1);
    long long s = static_cast<long long>(n) * last;

    std::vector<FiltrationQuotient> out;
    if (second_last > last) {
        // xi_{n-1} > xi_n: four quotients, the tilde layer only when
        // the kernel power exceeds one.
        Partition hm = hat_minus(xi);
        out.push_back({s, last, xi_minus(xi)});
        out.push_back({s, last - 1, hm});
        out.push_back({s, last, hm});
        if (last > 1) {
            out.push_back({s, last - 1, tilde_minus(xi)});
        }
    } else if (n == 1) {
        // Square two-row case xi_0 = xi_1: the xi_minus layer is absent.
        Partition hm = hat_minus(xi);
        out.push_back({s, last - 1, hm});
        out.push_back({s, last, hm});
        if (last > 1) {
            out.push_back({s, last - 1, tilde_minus(xi)});
        }
    } else if (last >= 2) {
        // xi_{n-1} = xi_n >= 2 with n >= 2: six quotients, two of them
        // shifted by an extra n-1.
        HatMinusComposites comps = hat_minus_composites(xi);
        out.push_back({s, last, xi_minus(xi)});
        out.push_back({s, last - 1, comps.plus});
        out.push_back({s + n - 1, last, comps.minus});
        out.push_back({s + n - 1, last - 1, comps.hat});
        out.push_back({s, last, hat_minus(xi)});
        out.push_back({s, last - 1, tilde_minus(xi)});
    } else {
        // xi_{n-1} = xi_n = 1 with n >= 2 is not covered by the filtration
        // theorems; refuse rather than extrapolate.
        throw UncoveredCaseError();
    }
    return out;
}

FiltrationReport verify_filtration(const CVIndex& idx) {
    FiltrationReport report;
    report.input = idx;
    report.quotients = kernel_filtration(idx);
    report.xi_plus = xi_plus(idx.xi);
    int n = idx.xi.num_parts() - 1;
    report.kernel_generator = KernelGenerator{n, idx.xi.part(n)};
    report.dim = cv_dim(idx.xi);
    report.dim_plus = cv_dim(report.xi_plus);
    BigInt kernel_dim = 0;
    for (const FiltrationQuotient& q : report.quotients) {
        report.quotient_dims.push_back(cv_dim(q.xi));
        kernel_dim += report.quotient_dims.back();
    }
    report.balanced = (report.dim == report.dim_plus + kernel_dim);
    return report;
}

SweepSummary verify_filtration_sweep(int max_size, int max_parts) {
    SweepSummary summary;
    summary.max_size = max_size;
    summary.max_parts = max_parts;
    for (const Partition& xi : partitions_bounded(max_size, max_parts)) {
        if (xi.empty()) {
            continue;
        }
        try {
            FiltrationReport report = verify_filtration(CVIndex{0, xi});
            ++summary.covered;
            if (report.balanced) {
                ++summary.balanced;
            } else {
                ++summary.unbalanced;
                summary.failures.push_back(xi.to_string());
            }
        } catch (const UncoveredCaseError&) {
            ++summary.uncovered;
        }
    }
    return summary;
}

std::string to_json(const FiltrationReport& report) {
    std::string out = "{\"xi\":\"" + report.input.xi.to_string() + "\"";
    out += ",\"xi_plus\":\"" + report.xi_plus.to_string() + "\"";
    out += ",\"dim\":\"" + report.dim.get_str() + "\"";
    out += ",\"dim_plus\":\"" + report.dim_plus.get_str() + "\"";
    out += ",\"quotients\":[";
    for (size_t i = 0; i < report.quotients.size(); ++i) {
        const FiltrationQuotient& q = report.quotients[i];
        if (i > 0) out += ",";
        out += "{\"shift\":" + std::to_string(q.grade_shift);
        out += ",\"f_shift\":" + std::to_string(q.f_shift);
        out += ",\"xi\":\"" + q.xi.to_string() + "\"";
        out += ",\"dim\":\"" + report.quotient_dims[i].get_str() + "\"}";
    }
    out += "],\"balanced\":";
    out += report.balanced ? "true" : "false";
    out += "}";
    return out;
}

}  // namespace slweyl
