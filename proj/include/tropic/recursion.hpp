#pragma once

// Kontsevich's recursion for the number N_d of rational plane curves of
// degree d through 3d-1 general points.

#include "tropic/rational.hpp"

#include <map>
#include <vector>

namespace tropic {

using RecursionTable = std::map<int, BigInt>;

inline RecursionTable kontsevich(int d_max) {
    if (d_max < 1) throw DomainError("d_max must be at least 1");
    const unsigned top = static_cast<unsigned>(3 * d_max);
    std::vector<std::vector<BigInt>> pascal(top + 1);
    for (unsigned n = 0; n <= top; ++n) {
        pascal[n].assign(n + 1, 1);
        for (unsigned k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    auto choose = [&](int n, int k) -> BigInt {
        if (n < 0 || k < 0 || k > n) return 0;
        return pascal[n][k];
    };
    RecursionTable N;
    N[1] = 1;
    for (int d = 2; d <= d_max; ++d) {
        BigInt sum = 0;
        for (int d1 = 1; d1 < d; ++d1) {
            int d2 = d - d1;
            BigInt a = BigInt(d1 * d1) * (d2 * d2) * choose(3 * d - 4, 3 * d1 - 2);
            BigInt b = BigInt(d1 * d1 * d1) * d2 * choose(3 * d - 4, 3 * d1 - 1);
            sum += (a - b) * N[d1] * N[d2];
        }
        N[d] = sum;
    }
    return N;
}

}  // namespace tropic
