#include "catch_amalgamated.hpp"

#include "../fixtures.hpp"

using namespace tropic;

TEST_CASE("Kontsevich numbers") {
    auto N = kontsevich(8);
    CHECK(N.size() == 8);
    CHECK(N[1] == 1);
    CHECK(N[2] == 1);
    CHECK(N[3] == 12);
    CHECK(N[4] == 620);
    CHECK(N[5] == 87304);
    CHECK(N[6] == BigInt("26312976"));
    CHECK(N[7] == BigInt("14616808192"));
    CHECK(N[8] == BigInt("13525751027392"));
    CHECK_THROWS_AS(kontsevich(0), DomainError);
}

TEST_CASE("Kontsevich numbers are positive and stable under extension") {
    auto small = kontsevich(5), big = kontsevich(12);
    for (const auto& [d, n] : small) CHECK(big.at(d) == n);
    for (const auto& [d, n] : big) CHECK(n > 0);
    // Grows faster than factorially.
    for (int d = 3; d <= 12; ++d) CHECK(big.at(d) > big.at(d - 1) * d);
}

TEST_CASE("recursion agrees with the tropical count in low degree") {
    auto N = kontsevich(2);
    CHECK(count_seeded(1, 7).n_complex == N[1]);
    CHECK(count_seeded(2, 7).n_complex == N[2]);
}
