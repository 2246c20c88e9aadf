#pragma once

#include <gmpxx.h>

#include <string>

namespace slweyl {

// Dimensions and coefficients grow like 4^n; all integer arithmetic in the
// library is exact and unbounded.
using BigInt = mpz_class;

// gmpxx has no long long constructor.
inline BigInt to_bigint(long long value) {
    return BigInt(std::to_string(value));
}

}  // namespace slweyl
