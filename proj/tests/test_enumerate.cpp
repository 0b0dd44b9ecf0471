#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <set>

#include "hurwitz/characters.hpp"
#include "hurwitz/enumerate.hpp"

using namespace hurwitz;

namespace {

std::vector<Perm> all_perms(int d) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Independent oracle: double loop over S_d x S_d, orbits under simultaneous
// conjugation found by closing with all of S_d.
struct BruteResult {
    long long classes = 0;
    long long tuples = 0;
    long long raw_tuples = 0;
};

BruteResult brute_force_strong(const BranchDatum& datum) {
    int d = datum.degree;
    auto perms = all_perms(d);
    std::set<std::pair<std::vector<int>, std::vector<int>>> hits;
    BruteResult res;
    for (const Perm& g1 : perms) {
        if (g1.cycle_type() != datum.partitions[0]) continue;
        for (const Perm& g2 : perms) {
            if (g2.cycle_type() != datum.partitions[1]) continue;
            Perm g3 = (g1 * g2).inverse();
            if (g3.cycle_type() != datum.partitions[2]) continue;
            ++res.raw_tuples;
            if (!is_transitive(std::vector<const Perm*>{&g1, &g2}, d)) continue;
            ++res.tuples;
            hits.insert({g1.images(), g2.images()});
        }
    }
    while (!hits.empty()) {
        ++res.classes;
        // close the first remaining hit under conjugation by all of S_d
        auto seed = *hits.begin();
        std::vector<std::pair<std::vector<int>, std::vector<int>>> frontier{seed};
        hits.erase(seed);
        while (!frontier.empty()) {
            auto [i1, i2] = frontier.back();
            frontier.pop_back();
            Perm g1(i1), g2(i2);
            for (const Perm& h : perms) {
                auto key = std::make_pair(g1.conjugate_by(h).images(), g2.conjugate_by(h).images());
                auto it = hits.find(key);
                if (it != hits.end()) {
                    hits.erase(it);
                    frontier.push_back(key);
                }
            }
        }
    }
    return res;
}

}  // namespace

TEST_CASE("strong classes of the base example") {
    BranchDatum d{0, 3, {Partition{2, 1}, Partition{2, 1}, Partition{3}}};
    StrongClassSet s = enumerate_strong(d);
    CHECK(s.class_count() == 1);
    CHECK(s.tuple_count == 6);
    CHECK(s.classes[0].aut_order == 1);
}

TEST_CASE("unrealizable datum yields zero classes") {
    StrongClassSet s = enumerate_strong(heart_datum({4, 2, Partition{3, 3, 3}}));
    CHECK(s.class_count() == 0);
    CHECK(s.tuple_count == 0);
}

TEST_CASE("repeated-partition data at degree 5 are realizable") {
    CHECK(enumerate_strong(heart_datum({2, 2, Partition{5}})).class_count() >= 1);
    CHECK(enumerate_strong(heart_datum({2, 1, Partition{3, 2}})).class_count() >= 1);
}

TEST_CASE("rejects bad input") {
    CHECK_THROWS_AS(enumerate_strong(BranchDatum{0, 3, {Partition{3}, Partition{3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        enumerate_strong(BranchDatum{1, 3, {Partition{2, 1}, Partition{2, 1}, Partition{3}}}),
        std::invalid_argument);
}

TEST_CASE("genus_of") {
    Constellation sphere;
    sphere.degree = 3;
    sphere.g = {Perm({1, 0, 2}), Perm({0, 2, 1}), Perm({1, 2, 0})};
    REQUIRE(sphere.product_is_identity());
    CHECK(genus_of(sphere) == 0);

    Constellation torus;
    torus.degree = 3;
    torus.g = {Perm({1, 2, 0}), Perm({1, 2, 0}), Perm({1, 2, 0})};
    REQUIRE(torus.product_is_identity());
    CHECK(genus_of(torus) == 1);

    for (const StrongClass& cls : enumerate_strong(heart_datum({4, 4, Partition{9}})).classes)
        CHECK(genus_of(cls.rep) == 2);
}

TEST_CASE("class representatives satisfy all constellation invariants") {
    std::vector<BranchDatum> data = {
        heart_datum({2, 2, Partition{5}}),
        heart_datum({3, 2, Partition{7}}),
        heart_datum({4, 3, Partition{7, 2}}),
        heart_datum({4, 2, Partition{4, 3, 2}}),
    };
    for (const BranchDatum& d : data) {
        StrongClassSet s = enumerate_strong(d);
        long long fact = 1;
        for (int i = 2; i <= d.degree; ++i) fact *= i;
        long long tuple_sum = 0;
        for (const StrongClass& cls : s.classes) {
            CHECK(cls.rep.product_is_identity());
            CHECK(cls.rep.transitive());
            for (int j = 0; j < 3; ++j) CHECK(cls.rep.g[j].cycle_type() == d.partitions[j]);
            CHECK(genus_of(cls.rep) == d.cover_genus);
            CHECK(fact % cls.aut_order == 0);
            tuple_sum += fact / cls.aut_order;
        }
        CHECK(tuple_sum == s.tuple_count);
    }
}

TEST_CASE("agrees with the naive double-loop oracle for d <= 5") {
    for (int d = 2; d <= 5; ++d)
        for (const Partition& a : all_partitions(d))
            for (const Partition& b : all_partitions(d))
                for (const Partition& c : all_partitions(d)) {
                    std::vector<Partition> ps{a, b, c};
                    auto g = inferred_genus(d, ps);
                    if (!g) continue;
                    BranchDatum datum{*g, d, ps};
                    BruteResult brute = brute_force_strong(datum);
                    StrongClassSet s = enumerate_strong(datum);
                    CHECK(s.class_count() == brute.classes);
                    CHECK(s.tuple_count == brute.tuples);
                    CHECK(s.raw_tuple_count == brute.raw_tuples);
                }
}

TEST_CASE("raw tuple counts match the character-theoretic count") {
    // spot checks at d = 5 and 7; the exhaustive d <= 6 sweep lives in the
    // acceptance suite
    std::vector<BranchDatum> data = {
        BranchDatum{0, 5, {Partition{2, 2, 1}, Partition{2, 3}, Partition{2, 3}}},
        heart_datum({3, 2, Partition{7}}),
        heart_datum({3, 3, Partition{4, 3}}),
    };
    for (const BranchDatum& d : data)
        CHECK(enumerate_strong(d).raw_tuple_count ==
              frobenius_tuple_count(d.partitions[0], d.partitions[1], d.partitions[2]));
}
