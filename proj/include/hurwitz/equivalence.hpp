#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/enumerate.hpp"

namespace hurwitz {

// Generating moves of the weak-equivalence closure, acting on constellations.
// Each preserves product-identity and transitivity; Braid1 swaps the cycle
// types at slots 1,2, Braid2 swaps slots 2,3, Reverse reverses slot order.
enum class Move { Braid1, Braid2, Reverse };

inline Constellation apply_move(Move m, const Constellation& c) {
    Constellation out;
    out.degree = c.degree;
    const Perm& g1 = c.g[0];
    const Perm& g2 = c.g[1];
    const Perm& g3 = c.g[2];
    switch (m) {
        case Move::Braid1:
            out.g = {g1 * g2 * g1.inverse(), g1, g3};
            break;
        case Move::Braid2:
            out.g = {g1, g2 * g3 * g2.inverse(), g2};
            break;
        case Move::Reverse:
            out.g = {g3.inverse(), g2.inverse(), g1.inverse()};
            break;
    }
    return out;
}

// Orientation reversal of the covering surface with slots kept in place:
// (g1, g2, g3) -> (g1^-1, g2^-1, g2 g1) with g2 g1 conjugate to g3^-1.
// Composite of Reverse with braid moves; preserves each slot's cycle type.
inline Constellation mirror(const Constellation& c) {
    Constellation out;
    out.degree = c.degree;
    out.g = {c.g[0].inverse(), c.g[1].inverse(), c.g[1] * c.g[0]};
    return out;
}

namespace detail {

// A permutation h with x.conjugate_by(h) == canonical_of_type(type of x):
// matches cycles of x (ordered by length desc, then minimal element) onto the
// consecutive canonical blocks.
inline Perm conjugator_to_canonical(const Perm& x) {
    int d = x.degree();
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(d, 0);
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = x(j)) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        cycles.push_back(std::move(cyc));
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<int> img(d);
    int s = 0;
    for (const auto& cyc : cycles) {
        for (std::size_t j = 0; j < cyc.size(); ++j) img[cyc[j]] = s + static_cast<int>(j);
        s += static_cast<int>(cyc.size());
    }
    return Perm(std::move(img));
}

}  // namespace detail

// Conjugates a constellation so that the slot an enumerator would freeze for
// its ordered types carries the canonical permutation, then minimizes the
// iterated slot over the frozen-slot centralizer. Two constellations are
// simultaneously conjugate iff their canonical forms coincide.
inline Constellation canonicalize(const Constellation& c) {
    std::vector<Partition> types{c.g[0].cycle_type(), c.g[1].cycle_type(), c.g[2].cycle_type()};
    detail::Roles roles = detail::choose_roles(types);
    Perm h = detail::conjugator_to_canonical(c.g[roles.frozen]);
    Perm frozen = c.g[roles.frozen].conjugate_by(h);
    Perm iter = c.g[roles.iterated].conjugate_by(h);
    std::vector<Perm> cgens = centralizer_generators(frozen);
    // minimize iter over its centralizer-conjugation orbit, tracking the
    // conjugator so the solved slot can be rebuilt consistently
    detail::OrbitInfo orbit = detail::conjugation_orbit(iter, cgens);
    Constellation out;
    out.degree = c.degree;
    out.g[roles.frozen] = frozen;
    out.g[roles.iterated] = orbit.min;
    out.g[roles.solved] = detail::solve_third(roles, frozen, orbit.min);
    return out;
}

// The Braid2 image in canonical form. An involution on canonical forms for
// data whose last two partitions coincide.
inline Constellation duality_partner(const Constellation& c) {
    return canonicalize(apply_move(Move::Braid2, c));
}

struct WeakClassSet {
    long long nu = 0;
    std::vector<Constellation> reps;  // one canonical representative per weak class
    // strong_to_weak[o][i] = weak class of strong class i of ordering o
    std::vector<std::vector<int>> strong_to_weak;
    std::vector<std::vector<Partition>> orderings;  // ordering 0 is the datum's own
    long long strong_class_count = 0;  // strong classes of the datum's own ordering
    long long dessin_class_count = 0;  // ordering-0 classes up to mirror symmetry
    long long tuple_count = 0;         // transitive tuples of the datum's own ordering
    long long raw_tuple_count = 0;

    long long mirror_merges() const { return strong_class_count - dessin_class_count; }
    long long duality_merges() const { return dessin_class_count - nu; }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++n;
        return n;
    }
};

}  // namespace detail

// Weak Hurwitz number: enumerates strong classes for every distinct ordering
// of the datum's partition multiset and closes them under the braid moves,
// reversal, and re-canonicalization by conjugation. BFS over canonical forms
// terminates because conjugacy classes of triples are finite.
inline WeakClassSet weak_count(const BranchDatum& datum) {
    if (datum.n() != 3) throw std::invalid_argument("weak_count requires exactly 3 partitions");
    if (!is_compatible(datum)) throw std::invalid_argument("incompatible datum: " + datum.str());

    WeakClassSet out;

    // distinct orderings of the multiset, datum order first
    static const int perms3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::string> ordering_keys;
    for (const auto& s : perms3) {
        std::vector<Partition> o{datum.partitions[s[0]], datum.partitions[s[1]], datum.partitions[s[2]]};
        std::string key = o[0].str() + o[1].str() + o[2].str();
        if (std::find(ordering_keys.begin(), ordering_keys.end(), key) != ordering_keys.end()) continue;
        ordering_keys.push_back(key);
        out.orderings.push_back(std::move(o));
    }
    auto ordering_index = [&](const std::vector<Partition>& types) {
        std::string key = types[0].str() + types[1].str() + types[2].str();
        for (std::size_t i = 0; i < ordering_keys.size(); ++i)
            if (ordering_keys[i] == key) return static_cast<int>(i);
        throw std::logic_error("move image left the ordering family");
    };

    // strong classes per ordering, with lookup by canonical iterated-slot images
    struct OrderingData {
        StrongClassSet strong;
        detail::Roles roles;
        std::unordered_map<std::vector<int>, int, PermHash> class_of;
    };
    std::vector<OrderingData> data(out.orderings.size());
    std::vector<int> node_base(out.orderings.size() + 1, 0);
    for (std::size_t o = 0; o < out.orderings.size(); ++o) {
        BranchDatum ordered{datum.cover_genus, datum.degree, out.orderings[o]};
        data[o].roles = detail::choose_roles(out.orderings[o]);
        data[o].strong = enumerate_strong(ordered);
        for (std::size_t i = 0; i < data[o].strong.classes.size(); ++i) {
            const Constellation& rep = data[o].strong.classes[i].rep;
            data[o].class_of.emplace(rep.g[data[o].roles.iterated].images(), static_cast<int>(i));
        }
        node_base[o + 1] = node_base[o] + static_cast<int>(data[o].strong.classes.size());
    }
    out.strong_class_count = static_cast<long long>(data[0].strong.classes.size());
    out.tuple_count = data[0].strong.tuple_count;
    out.raw_tuple_count = data[0].strong.raw_tuple_count;

    auto locate = [&](const Constellation& c) -> int {
        std::vector<Partition> types{c.g[0].cycle_type(), c.g[1].cycle_type(), c.g[2].cycle_type()};
        int o = ordering_index(types);
        Constellation canon = canonicalize(c);
        auto it = data[o].class_of.find(canon.g[data[o].roles.iterated].images());
        if (it == data[o].class_of.end())
            throw std::logic_error("moved constellation not found among strong classes");
        return node_base[o] + it->second;
    };

    int total_nodes = node_base.back();
    detail::UnionFind uf(total_nodes);
    for (std::size_t o = 0; o < out.orderings.size(); ++o) {
        for (std::size_t i = 0; i < data[o].strong.classes.size(); ++i) {
            int node = node_base[o] + static_cast<int>(i);
            const Constellation& rep = data[o].strong.classes[i].rep;
            for (Move m : {Move::Braid1, Move::Braid2, Move::Reverse})
                uf.unite(node, locate(apply_move(m, rep)));
        }
    }

    // dessin classes of the datum's own ordering: mirror closure only
    {
        detail::UnionFind duf(static_cast<int>(data[0].strong.classes.size()));
        for (std::size_t i = 0; i < data[0].strong.classes.size(); ++i) {
            int target = locate(mirror(data[0].strong.classes[i].rep));
            // mirror preserves slot types, so the image stays in ordering 0
            duf.unite(static_cast<int>(i), target - node_base[0]);
        }
        out.dessin_class_count = duf.components();
    }

    // weak classes = components; representative = rep of the smallest node
    std::map<int, int> root_to_weak;
    out.strong_to_weak.resize(out.orderings.size());
    for (std::size_t o = 0; o < out.orderings.size(); ++o) {
        out.strong_to_weak[o].resize(data[o].strong.classes.size());
        for (std::size_t i = 0; i < data[o].strong.classes.size(); ++i) {
            int node = node_base[o] + static_cast<int>(i);
            int root = uf.find(node);
            auto [it, inserted] = root_to_weak.emplace(root, static_cast<int>(out.reps.size()));
            if (inserted) out.reps.push_back(data[o].strong.classes[i].rep);
            out.strong_to_weak[o][i] = it->second;
        }
    }
    out.nu = static_cast<long long>(out.reps.size());
    return out;
}

}  // namespace hurwitz
