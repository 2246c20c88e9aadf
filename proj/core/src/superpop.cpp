#include "slweyl/superpop.hpp"

#include <bit>
#include <stdexcept>

namespace slweyl {

namespace {

constexpr int kMaxEnumeration = 30;  // bitmask width; 4^n explodes long before

void require_enumeration_range(int n, const char* who) {
    if (n < 0 || n > kMaxEnumeration) {
        throw std::invalid_argument(std::string(who) + ": parameter out of range");
    }
}

std::vector<int> mask_columns(std::uint32_t mask) {
    std::vector<int> cols;
    for (int j = 0; mask >> j; ++j) {
        if ((mask >> j) & 1u) {
            cols.push_back(j + 1);
        }
    }
    return cols;
}

std::string mask_string(std::uint32_t mask, int n) {
    std::string out(static_cast<size_t>(n), '0');
    for (int j = 0; j < n; ++j) {
        if ((mask >> j) & 1u) {
            out[static_cast<size_t>(j)] = '1';
        }
    }
    return out;
}

bool strictly_increasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i] <= v[i - 1]) return false;
    }
    return true;
}

bool weakly_increasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) return false;
    }
    return true;
}

}  // namespace

int SMatrix::ones_row1() const {
    return std::popcount(row1);
}

int SMatrix::ones_row2() const {
    return std::popcount(row2);
}

bool SMatrix::is_valid() const {
    if (n < 0 || n > kMaxEnumeration) {
        return false;
    }
    std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
    if ((row1 | row2) & ~full) {
        return false;
    }
    int limit = n - ones_row2();
    return (row1 >> limit) == 0u;
}

std::vector<int> SMatrix::columns_row1() const {
    return mask_columns(row1);
}

std::vector<int> SMatrix::columns_row2() const {
    return mask_columns(row2);
}

std::string SMatrix::row1_string() const {
    return mask_string(row1, n);
}

std::string SMatrix::row2_string() const {
    return mask_string(row2, n);
}

bool Pop::is_valid() const {
    return bound >= 0 && m >= 0 && m <= bound && overlay.num_parts() <= bound - m &&
           overlay.largest() <= m;
}

bool SuperPop::is_valid() const {
    return matrix.is_valid() && pop.is_valid() && pop.bound == matrix.n - matrix.entry_sum();
}

bool BasisTuple::is_valid() const {
    int l = static_cast<int>(c.size());
    int k = static_cast<int>(b.size());
    int j = static_cast<int>(a.size());
    if (l > 0 && (!strictly_increasing(c) || c.front() < 0 || c.back() > n - 1)) return false;
    if (k > 0 && (!strictly_increasing(b) || b.front() < 0 || b.back() > n - l - 1)) return false;
    if (j > 0 && (!weakly_increasing(a) || a.front() < 0 || a.back() > n - l - k - j)) return false;
    return l + k + j <= n;
}

bool PbwWord::is_canonical() const {
    // y2 block first (weakly increasing), then x1, then y3 (strictly
    // increasing: odd generators square to zero).
    int phase = 0;
    int last_degree = -1;
    for (const auto& f : factors) {
        int gen_phase = f.gen == Generator::y2 ? 0 : (f.gen == Generator::x1 ? 1 : 2);
        if (gen_phase < phase || f.degree < 0) {
            return false;
        }
        if (gen_phase > phase) {
            phase = gen_phase;
            last_degree = -1;
        }
        if (phase == 0) {
            if (f.degree < last_degree) return false;
        } else {
            if (f.degree <= last_degree) return false;
        }
        last_degree = f.degree;
    }
    return true;
}

std::string PbwWord::to_string() const {
    if (factors.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += " ";
        switch (f.gen) {
            case Generator::y2: out += "y2"; break;
            case Generator::x1: out += "x1"; break;
            case Generator::y3: out += "y3"; break;
        }
        out += "[" + std::to_string(f.degree) + "]";
    }
    return out;
}

std::vector<SMatrix> enumerate_smatrices(int n) {
    require_enumeration_range(n, "enumerate_smatrices");
    std::vector<SMatrix> out;
    std::uint32_t row2_end = 1u << n;
    for (std::uint32_t r2 = 0; r2 < row2_end; ++r2) {
        int limit = n - std::popcount(r2);
        std::uint32_t row1_end = 1u << limit;
        for (std::uint32_t r1 = 0; r1 < row1_end; ++r1) {
            out.push_back(SMatrix{n, r1, r2});
        }
    }
    return out;
}

std::vector<Pop> enumerate_pops(int bound) {
    require_enumeration_range(bound, "enumerate_pops");
    std::vector<Pop> out;
    for (int m = 0; m <= bound; ++m) {
        for (Partition& overlay : partitions_in_box(bound - m, m)) {
            out.push_back(Pop{bound, m, std::move(overlay)});
        }
    }
    return out;
}

std::vector<SuperPop> enumerate_superpops(int n) {
    require_enumeration_range(n, "enumerate_superpops");
    std::vector<SuperPop> out;
    for (const SMatrix& matrix : enumerate_smatrices(n)) {
        for (Pop& pop : enumerate_pops(n - matrix.entry_sum())) {
            out.push_back(SuperPop{matrix, std::move(pop)});
        }
    }
    return out;
}

BasisTuple superpop_to_tuple(const SuperPop& sp) {
    BasisTuple t;
    t.n = sp.matrix.n;
    for (int col : sp.matrix.columns_row2()) {
        t.c.push_back(col - 1);
    }
    for (int col : sp.matrix.columns_row1()) {
        t.b.push_back(col - 1);
    }
    // Overlay parts weakly increasing, front-padded with zeros to the number
    // of y2 factors bound - m.
    int j = sp.pop.bound - sp.pop.m;
    t.a.assign(static_cast<size_t>(j), 0);
    const auto& parts = sp.pop.overlay.parts();
    size_t at = static_cast<size_t>(j) - parts.size();
    for (size_t i = parts.size(); i-- > 0;) {
        t.a[at++] = parts[i];
    }
    return t;
}

SuperPop tuple_to_superpop(const BasisTuple& t) {
    SMatrix matrix{t.n, 0, 0};
    for (int degree : t.c) {
        matrix.row2 |= 1u << degree;
    }
    for (int degree : t.b) {
        matrix.row1 |= 1u << degree;
    }
    int m = t.n - static_cast<int>(t.a.size() + t.b.size() + t.c.size());
    std::vector<int> overlay(t.a.rbegin(), t.a.rend());
    return SuperPop{matrix, Pop{t.n - matrix.entry_sum(), m, Partition(std::move(overlay))}};
}

PbwWord superpop_word(const SuperPop& sp) {
    PbwWord w;
    int zero_factors = sp.pop.bound - sp.pop.m - sp.pop.overlay.num_parts();
    for (int i = 0; i < zero_factors; ++i) {
        w.factors.push_back({Generator::y2, 0});
    }
    for (int i = sp.pop.overlay.num_parts(); i-- > 0;) {
        w.factors.push_back({Generator::y2, sp.pop.overlay.part(i)});
    }
    for (int col : sp.matrix.columns_row1()) {
        w.factors.push_back({Generator::x1, col - 1});
    }
    for (int col : sp.matrix.columns_row2()) {
        w.factors.push_back({Generator::y3, col - 1});
    }
    return w;
}

PbwWord tuple_word(const BasisTuple& t) {
    PbwWord w;
    for (int degree : t.a) {
        w.factors.push_back({Generator::y2, degree});
    }
    for (int degree : t.b) {
        w.factors.push_back({Generator::x1, degree});
    }
    for (int degree : t.c) {
        w.factors.push_back({Generator::y3, degree});
    }
    return w;
}

WordWeight word_weight_grade(const PbwWord& w) {
    WordWeight out;
    for (const auto& f : w.factors) {
        out.grade += f.degree;
        switch (f.gen) {
            case Generator::y2:
                out.h1_offset -= 1;
                out.h2_offset -= 2;
                break;
            case Generator::x1:
                out.h2_offset -= 1;
                break;
            case Generator::y3:
                out.h1_offset -= 1;
                out.h2_offset -= 1;
                break;
        }
    }
    return out;
}

std::string to_json(const SuperPop& sp) {
    std::string out = "{\"n\":" + std::to_string(sp.matrix.n);
    out += ",\"row1\":\"" + sp.matrix.row1_string() + "\"";
    out += ",\"row2\":\"" + sp.matrix.row2_string() + "\"";
    out += ",\"m\":" + std::to_string(sp.pop.m);
    out += ",\"overlay\":[";
    const auto& parts = sp.pop.overlay.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts[i]);
    }
    out += "]}";
    return out;
}

}  // namespace slweyl
