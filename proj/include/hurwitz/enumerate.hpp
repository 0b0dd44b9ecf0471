#pragma once

#include <array>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hurwitz/datum.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

// Transitive triple with product identity; one realization of a datum.
struct Constellation {
    std::array<Perm, 3> g;
    int degree = 0;

    bool product_is_identity() const { return (g[0] * g[1] * g[2]).is_identity(); }

    bool transitive() const {
        return is_transitive(std::vector<const Perm*>{&g[0], &g[1]}, degree);
    }
};

// Euler characteristic of the covering surface read off the triple.
inline int euler_char(const Constellation& c) {
    return c.g[0].cycle_count() + c.g[1].cycle_count() + c.g[2].cycle_count() - c.degree;
}

// g = 1 - chi/2; a broken enumerator shows up as odd chi or negative g.
inline int genus_of(const Constellation& c) {
    int chi = euler_char(c);
    if (chi % 2 != 0 || chi > 2)
        throw std::logic_error("constellation has invalid Euler characteristic");
    return (2 - chi) / 2;
}

struct StrongClass {
    Constellation rep;
    long long orbit_size = 0;  // orbit under the centralizer of the frozen slot
    long long aut_order = 0;   // centralizer order of the whole tuple in S_d
};

struct StrongClassSet {
    std::vector<StrongClass> classes;
    long long tuple_count = 0;      // transitive ordered triples with the given types
    long long raw_tuple_count = 0;  // same without the transitivity requirement

    long long class_count() const { return static_cast<long long>(classes.size()); }
};

namespace detail {

// Role assignment for an ordered type triple: freeze the slot with the
// largest conjugacy class (smallest centralizer), iterate the smaller of the
// remaining two, solve for the third. Deterministic tie-break by slot index.
struct Roles {
    int frozen = 0;
    int iterated = 1;
    int solved = 2;
};

inline Roles choose_roles(const std::vector<Partition>& types) {
    Roles r;
    long long best = -1;
    for (int s = 0; s < 3; ++s) {
        long long cs = types[s].class_size();
        if (cs > best) {
            best = cs;
            r.frozen = s;
        }
    }
    std::vector<int> rest;
    for (int s = 0; s < 3; ++s)
        if (s != r.frozen) rest.push_back(s);
    if (types[rest[0]].class_size() <= types[rest[1]].class_size()) {
        r.iterated = rest[0];
        r.solved = rest[1];
    } else {
        r.iterated = rest[1];
        r.solved = rest[0];
    }
    return r;
}

// Given the frozen and iterated slot values, the third slot is determined by
// g1*g2*g3 = id.
inline Perm solve_third(const Roles& r, const Perm& frozen, const Perm& iterated) {
    std::array<const Perm*, 3> slot{};
    slot[r.frozen] = &frozen;
    slot[r.iterated] = &iterated;
    switch (r.solved) {
        case 0: return (*slot[1] * *slot[2]).inverse();
        case 1: return slot[0]->inverse() * slot[2]->inverse();
        default: return (*slot[0] * *slot[1]).inverse();
    }
}

// Lexicographically minimal element of the orbit of `b` under conjugation by
// the group generated by `gens`, plus the orbit size. Orbit sizes are bounded
// by the centralizer order of the frozen slot, which is small for the slots
// this enumerator freezes.
struct OrbitInfo {
    Perm min;
    long long size = 0;
};

inline OrbitInfo conjugation_orbit(const Perm& b, const std::vector<Perm>& gens,
                                   std::unordered_set<std::vector<int>, PermHash>* visited = nullptr) {
    OrbitInfo info{b, 1};
    std::unordered_set<std::vector<int>, PermHash> local;
    auto& seen_local = local;
    seen_local.insert(b.images());
    if (visited) visited->insert(b.images());
    std::vector<Perm> frontier{b};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& x : frontier) {
            for (const Perm& h : gens) {
                Perm y = x.conjugate_by(h);
                if (seen_local.insert(y.images()).second) {
                    if (visited) visited->insert(y.images());
                    if (y < info.min) info.min = y;
                    ++info.size;
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return info;
}

}  // namespace detail

// Enumerates the strong equivalence classes (orbits under simultaneous
// conjugation) of constellations realizing an ordered 3-partition datum.
// Classes are reported with representatives in datum slot order; the
// representative is the one whose iterated-slot image array is
// lexicographically minimal in its orbit under the frozen-slot centralizer.
inline StrongClassSet enumerate_strong(const BranchDatum& datum) {
    if (datum.n() != 3) throw std::invalid_argument("enumeration requires exactly 3 partitions");
    if (!is_compatible(datum)) throw std::invalid_argument("incompatible datum: " + datum.str());

    const int d = datum.degree;
    const detail::Roles roles = detail::choose_roles(datum.partitions);
    const Perm frozen = canonical_of_type(datum.partitions[roles.frozen]);
    const std::vector<Perm> cgens = centralizer_generators(frozen);
    const long long cent_order = datum.partitions[roles.frozen].centralizer_order();
    const Partition& solved_type = datum.partitions[roles.solved];

    long long factorial = 1;
    for (int i = 2; i <= d; ++i) factorial *= i;
    const long long frozen_class_size = factorial / cent_order;

    StrongClassSet out;
    std::vector<Perm> hits;
    long long typed_pairs = 0;  // candidates passing the type check, transitive or not

    iterate_class(datum.partitions[roles.iterated], [&](const std::vector<int>& img) {
        Perm b(img);
        Perm c = detail::solve_third(roles, frozen, b);
        if (c.cycle_type() != solved_type) return;
        ++typed_pairs;
        if (!is_transitive(std::vector<const Perm*>{&frozen, &b}, d)) return;
        hits.push_back(std::move(b));
    });

    out.raw_tuple_count = typed_pairs * frozen_class_size;
    out.tuple_count = static_cast<long long>(hits.size()) * frozen_class_size;

    // Partition the hit set into centralizer-conjugation orbits. Every
    // conjugate of a hit is itself a hit, so marking visited hits suffices.
    std::unordered_set<std::vector<int>, PermHash> visited;
    for (const Perm& b : hits) {
        if (visited.count(b.images())) continue;
        detail::OrbitInfo orbit = detail::conjugation_orbit(b, cgens, &visited);
        StrongClass cls;
        cls.orbit_size = orbit.size;
        cls.aut_order = cent_order / orbit.size;
        Constellation rep;
        rep.degree = d;
        rep.g[roles.frozen] = frozen;
        rep.g[roles.iterated] = orbit.min;
        rep.g[roles.solved] = detail::solve_third(roles, frozen, orbit.min);
        cls.rep = std::move(rep);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

}  // namespace hurwitz
