#include <catch_amalgamated.hpp>

#include <algorithm>

#include "hurwitz/datum.hpp"

using namespace hurwitz;

TEST_CASE("Riemann-Hurwitz compatibility") {
    BranchDatum d1{0, 5, {Partition{2, 2, 1}, Partition{2, 3}, Partition{2, 3}}};
    CHECK(is_compatible(d1));
    BranchDatum d2{0, 3, {Partition{3}}};
    CHECK_FALSE(is_compatible(d2));
    BranchDatum bad{2, 9, {Partition{2, 2, 2, 2, 1}, Partition{2, 2, 9}}};
    CHECK_THROWS_AS(is_compatible(bad), std::invalid_argument);
}

TEST_CASE("compatibility is invariant under reordering") {
    BranchDatum d{0, 5, {Partition{2, 2, 1}, Partition{2, 3}, Partition{2, 3}}};
    std::vector<Partition> ps = d.partitions;
    std::sort(ps.begin(), ps.end());
    do {
        BranchDatum r{d.cover_genus, d.degree, ps};
        CHECK(is_compatible(r) == is_compatible(d));
    } while (std::next_permutation(ps.begin(), ps.end()));
}

TEST_CASE("heart_datum") {
    BranchDatum a = heart_datum({4, 2, Partition{3, 3, 3}});
    CHECK(a.cover_genus == 0);
    CHECK(a.degree == 9);
    CHECK(a.partitions[0] == Partition({2, 2, 2, 2, 1}));
    CHECK(a.partitions[1] == Partition({2, 2, 5}));
    CHECK(a.partitions[2] == Partition({3, 3, 3}));
    CHECK(is_compatible(a));

    BranchDatum b = heart_datum({2, 2, Partition{5}});
    CHECK(b.cover_genus == 1);
    CHECK(b.degree == 5);
    CHECK(b.partitions == std::vector<Partition>{Partition{2, 2, 1}, Partition{5}, Partition{5}});

    CHECK_THROWS_AS(heart_datum({3, 2, Partition{4, 3}}), std::invalid_argument);  // h-l even
    CHECK_THROWS_AS(heart_datum({2, 3, Partition{5}}), std::invalid_argument);     // 2h+1 > 2k+1
    CHECK_THROWS_AS(heart_datum({4, 2, Partition{3, 3}}), std::invalid_argument);  // wrong sum
}

TEST_CASE("every valid heart datum is compatible") {
    for (int k = 1; k <= 20; ++k)
        for (int h = 0; h <= k; ++h)
            for (const Partition& pi : all_partitions(2 * k + 1)) {
                int hl = h - pi.length();
                if (hl < -1 || (hl % 2 + 2) % 2 == 0) continue;
                CHECK(is_compatible(heart_datum({k, h, pi})));
            }
}

TEST_CASE("realizability criterion status") {
    CHECK(zieve_status(heart_datum({4, 2, Partition{3, 3, 3}})) == ZieveStatus::gcd_obstruction);
    // all-GCD-1 datum with lcm triple (2,3,6): 1/2 + 1/3 + 1/6 = 1
    BranchDatum euclid{0, 6, {Partition{2, 2, 1, 1}, Partition{3, 1, 1, 1}, Partition{3, 2, 1}}};
    CHECK(zieve_status(euclid) == ZieveStatus::euclidean);
    // GCD precedence: all-3s partitions are tagged by the GCD rule first
    BranchDatum g3{1, 6, {Partition{3, 3}, Partition{3, 3}, Partition{3, 3}}};
    CHECK(zieve_status(g3) == ZieveStatus::gcd_obstruction);
    CHECK(zieve_status(heart_datum({4, 2, Partition{4, 3, 2}})) == ZieveStatus::applicable);
}

TEST_CASE("datum text grammar") {
    BranchDatum d = parse_datum("[2,2,1],[2,3],[2,3]");
    CHECK(d.degree == 5);
    CHECK(d.cover_genus == 0);
    CHECK(d.n() == 3);
    CHECK(d.str() == "[2,2,1],[3,2],[3,2]");  // parts normalize to descending order
    CHECK(parse_datum(" [ 2 , 7 ] , [7,2],[2,2,2,2,1]").degree == 9);

    CHECK_THROWS_AS(parse_datum("[2,2,x]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_datum(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_datum("[2,2],[3]"), std::invalid_argument);  // degree mismatch
    // parity failure: no integer genus
    CHECK_THROWS_AS(parse_datum("[2,1],[2,1],[2,1]"), std::invalid_argument);

    ParsedDatum loose = parse_datum_parts("[2,1],[2,1],[2,1]");
    CHECK_FALSE(loose.genus.has_value());
}

TEST_CASE("round trip through text form") {
    for (int d = 2; d <= 7; ++d)
        for (const Partition& a : all_partitions(d))
            for (const Partition& b : all_partitions(d)) {
                std::vector<Partition> ps{a, b, b};
                auto g = inferred_genus(d, ps);
                if (!g) continue;
                BranchDatum datum{*g, d, ps};
                BranchDatum back = parse_datum(datum.str());
                CHECK(back.partitions == datum.partitions);
                CHECK(back.cover_genus == datum.cover_genus);
            }
}

TEST_CASE("canonical string is order independent") {
    BranchDatum a = parse_datum("[2,2,1],[2,2,1],[5]");
    BranchDatum b = parse_datum("[5],[2,2,1],[2,2,1]");
    CHECK(a.canonical_str() == b.canonical_str());
}
