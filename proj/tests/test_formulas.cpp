#include <catch_amalgamated.hpp>

#include "hurwitz/equivalence.hpp"
#include "hurwitz/formulas.hpp"

using namespace hurwitz;
namespace f = hurwitz::formulas;

TEST_CASE("integer helpers") {
    CHECK(f::half(7) == 3);
    CHECK(f::half(8) == 4);
    CHECK(f::quarter_square(5) == 6);
    CHECK(f::quarter_square(6) == 9);
}

TEST_CASE("genus 0 case classification") {
    CHECK(f::classify_g0_h2(4, 3, 3, 3) == f::CaseTag::EE);
    CHECK(f::classify_g0_h2(4, 4, 4, 1) == f::CaseTag::EG);
    CHECK(f::classify_g0_h2(4, 5, 2, 2) == f::CaseTag::GE_G);
    CHECK(f::classify_g0_h2(5, 5, 3, 3) == f::CaseTag::GE_L);
    CHECK(f::classify_g0_h2(4, 5, 3, 1) == f::CaseTag::GG_G);
    CHECK(f::classify_g0_h2(4, 4, 3, 2) == f::CaseTag::GG_L);
    CHECK_THROWS_AS(f::classify_g0_h2(4, 3, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(f::classify_g0_h2(4, 4, 4, 4), std::invalid_argument);
}

TEST_CASE("nu_g0_h2 values and symmetry") {
    CHECK(f::nu_g0_h2(4, 3, 3, 3) == 0);
    CHECK(f::nu_g0_h2(4, 4, 3, 2) == 3);
    CHECK(f::nu_g0_h2(4, 5, 3, 1) == 2);
    CHECK(f::nu_g0_h2(4, 5, 2, 2) == 1);
    CHECK(f::nu_g0_h2(4, 7, 1, 1) == 1);
    // argument order must not matter
    CHECK(f::nu_g0_h2(4, 2, 3, 4) == 3);
    CHECK(f::nu_g0_h2(4, 1, 5, 3) == 2);
}

TEST_CASE("nu_g0_h2 matches enumeration for k = 3, 4, 5") {
    for (int k = 3; k <= 5; ++k)
        for (int p = 1; p <= 2 * k - 1; ++p)
            for (int q = 1; q <= p; ++q) {
                int r = 2 * k + 1 - p - q;
                if (r < 1 || r > q) continue;
                BranchDatum d = heart_datum({k, 2, Partition{p, q, r}});
                CHECK(f::nu_g0_h2(k, p, q, r) == weak_count(d).nu);
            }
}

TEST_CASE("nu_g1_h2 is the quarter square") {
    CHECK(f::nu_g1_h2(2) == 1);
    CHECK(f::nu_g1_h2(3) == 2);
    CHECK(f::nu_g1_h2(4) == 4);
    CHECK(f::nu_g1_h2(5) == 6);
    CHECK_THROWS_AS(f::nu_g1_h2(1), std::invalid_argument);
    for (int k = 2; k <= 4; ++k)
        CHECK(f::nu_g1_h2(k) == weak_count(heart_datum({k, 2, Partition{2 * k + 1}})).nu);
}

TEST_CASE("torus embedding count boundaries") {
    for (long long k = 3; k <= 10; ++k) {
        // eq_2 vanishes on the top range of p
        for (long long p = 2 * k - 3; p <= 2 * k; ++p) CHECK(f::eq_2(k, p) == 0);
        // eq_4 meets eq_3 at p = k+1 and vanishes at p = 2k
        CHECK(f::eq_4(k, k + 1) == f::eq_3(k));
        CHECK(f::eq_4(k, 2 * k) == 0);
        // eq_8 and eq_9 vanish near p = 2k
        for (long long p = 2 * k - 2; p <= 2 * k; ++p) CHECK(f::eq_8(k, p) == 0);
        for (long long p = 2 * k - 1; p <= 2 * k; ++p) CHECK(f::eq_9(k, p) == 0);
    }
}

TEST_CASE("per-embedding counts sum to the closed formula") {
    for (long long k = 3; k <= 8; ++k)
        for (long long p = k + 1; p <= 2 * k; ++p) {
            f::G1H3Counts c = f::claim_counts_g1_h3(k, p);
            CHECK(c.I >= 0);
            CHECK(c.total() == f::nu_g1_h3_uncorrected(k, p));
        }
    CHECK_THROWS_AS(f::claim_counts_g1_h3(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(f::claim_counts_g1_h3(4, 9), std::invalid_argument);
}

TEST_CASE("nu_g1_h3 with the single correction") {
    CHECK(f::nu_g1_h3_uncorrected(4, 7) == 6);
    CHECK(f::nu_g1_h3(4, 7) == 5);
    f::G1H3Counts c47 = f::claim_counts_g1_h3(4, 7);
    CHECK(c47.I == 1);
    CHECK(c47.II == 1);
    CHECK(c47.III == 1);
    CHECK(c47.IV == 1);
    CHECK(c47.V == 0);
    CHECK(c47.VI == 2);
    CHECK(c47.VII == 0);
    for (int k = 3; k <= 4; ++k)
        for (int p = k + 1; p <= 2 * k; ++p) {
            int q = 2 * k + 1 - p;
            Partition pi = (q > 0 && p != q) ? Partition{p, q} : Partition{p};
            if (pi.length() != 2) continue;
            CHECK(f::nu_g1_h3(k, p) == weak_count(heart_datum({k, 3, pi})).nu);
        }
}

TEST_CASE("genus 2 decomposition and closed formula") {
    CHECK(f::binom4(4) == 1);
    CHECK(f::binom4(5) == 5);
    CHECK(f::g2_symmetric_tuple_count(4) == 1);
    CHECK(f::g2_symmetric_tuple_count(5) == 3);

    f::G2Decomposition d4 = f::nu_g2_decomposition(4);
    CHECK(d4.asymmetric == 8);
    CHECK(d4.symmetric == 5);
    CHECK(d4.total() == 13);
    f::G2Decomposition d5 = f::nu_g2_decomposition(5);
    CHECK(d5.asymmetric == 40);
    CHECK(d5.symmetric == 15);
    CHECK(d5.total() == 55);

    for (long long k = 4; k <= 12; ++k)
        CHECK(f::nu_g2_decomposition(k).total() == f::nu_g2_h4_uncorrected(k));

    CHECK(f::nu_g2_h4_uncorrected(4) == 13);
    CHECK(f::nu_g2_h4(4) == 10);
    CHECK(f::nu_g2_h4(5) == 55);
    CHECK_THROWS_AS(f::nu_g2_h4(3), std::invalid_argument);
}
