#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Murnaghan-Nakayama recursion on first-column hook lengths (beta-numbers):
// removing a border strip of size t from lambda corresponds to an element
// b of the beta-set with b - t >= 0 and b - t not in the set; the sign is
// (-1)^(number of beta elements strictly between b - t and b).
inline long long mn_character(std::vector<int> beta, std::vector<int> mu, std::size_t mi,
                              std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
    if (mi == mu.size()) return 1;  // empty diagram
    auto key = std::make_pair(beta, std::vector<int>(mu.begin() + mi, mu.end()));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int t = mu[mi];
    long long total = 0;
    for (std::size_t bi = 0; bi < beta.size(); ++bi) {
        int target = beta[bi] - t;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == bi) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[bi]) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[bi] = target;
        std::sort(nb.begin(), nb.end());
        // drop a trailing run 0,1,2,... only if it encodes empty rows; keeping
        // the full beta-set normalized to fixed size is simpler and correct
        long long sub = mn_character(nb, mu, mi + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace detail

// Exact irreducible character value chi_lambda(mu) of the symmetric group.
inline long long character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum()) throw std::invalid_argument("partitions of different integers");
    int n = lambda.length();
    std::vector<int> beta(n);
    for (int i = 0; i < n; ++i) beta[i] = lambda.parts()[i] + (n - 1 - i);
    std::sort(beta.begin(), beta.end());
    std::vector<int> mu_parts = mu.parts();  // descending; any order is valid for MN
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    return detail::mn_character(beta, mu_parts, 0, memo);
}

inline long long irrep_dimension(const Partition& lambda) {
    return character_value(lambda, Partition(std::vector<int>(lambda.sum(), 1)));
}

// Exact character table of S_d: rows are irreducibles lambda, columns class
// types mu, both in the partitions_of order.
struct CharacterTable {
    int degree;
    std::vector<Partition> labels;
    std::vector<std::vector<long long>> chi;  // chi[lambda][mu]

    explicit CharacterTable(int d) : degree(d), labels(all_partitions(d)) {
        chi.resize(labels.size(), std::vector<long long>(labels.size()));
        for (std::size_t l = 0; l < labels.size(); ++l)
            for (std::size_t m = 0; m < labels.size(); ++m)
                chi[l][m] = character_value(labels[l], labels[m]);
    }

    // column orthogonality: sum over lambda of chi(mu)^2 = |centralizer(mu)|
    bool column_orthogonality_holds() const {
        for (std::size_t m = 0; m < labels.size(); ++m) {
            for (std::size_t m2 = 0; m2 < labels.size(); ++m2) {
                BigInt s = 0;
                for (std::size_t l = 0; l < labels.size(); ++l)
                    s += BigInt(chi[l][m]) * chi[l][m2];
                BigInt expect = (m == m2) ? BigInt(labels[m].centralizer_order()) : BigInt(0);
                if (s != expect) return false;
            }
        }
        return true;
    }
};

// Number of ordered triples (g1,g2,g3) with g_i in the class of type_i and
// g1*g2*g3 = id (transitivity NOT required):
//   N = |C1||C2||C3|/d! * sum over lambda of chi(C1)chi(C2)chi(C3)/dim.
// Exact rational arithmetic throughout; integrality of the result is checked.
inline long long frobenius_tuple_count(const Partition& t1, const Partition& t2,
                                       const Partition& t3) {
    int d = t1.sum();
    if (t2.sum() != d || t3.sum() != d) throw std::invalid_argument("types of different degrees");
    BigInt factorial = 1;
    for (int i = 2; i <= d; ++i) factorial *= i;

    // common denominator d! * prod of dims; sum as a single fraction
    std::vector<Partition> lambdas = all_partitions(d);
    BigInt num = 0, den = 0;
    BigInt dim_lcm = 1;
    std::vector<BigInt> dims;
    for (const Partition& l : lambdas) {
        BigInt dim = irrep_dimension(l);
        dims.push_back(dim);
        dim_lcm = boost::multiprecision::lcm(dim_lcm, dim);
    }
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        BigInt term = BigInt(character_value(lambdas[i], t1)) * character_value(lambdas[i], t2) *
                      character_value(lambdas[i], t3);
        num += term * (dim_lcm / dims[i]);
    }
    den = factorial * dim_lcm;
    num *= BigInt(t1.class_size()) * t2.class_size() * t3.class_size();
    if (num % den != 0) throw std::logic_error("non-integral tuple count");
    BigInt result = num / den;
    if (result < 0 || result > BigInt(std::numeric_limits<long long>::max()))
        throw std::overflow_error("tuple count out of range");
    return static_cast<long long>(result);
}

}  // namespace hurwitz
