#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// Branch datum over the sphere: covering genus g, degree d, and an ordered
// list of partitions of d (one per branching point). The base surface is
// always the sphere.
struct BranchDatum {
    int cover_genus = 0;
    int degree = 0;
    std::vector<Partition> partitions;

    int n() const { return static_cast<int>(partitions.size()); }

    void validate() const {
        if (degree < 1) throw std::invalid_argument("degree must be >= 1");
        if (cover_genus < 0) throw std::invalid_argument("genus must be >= 0");
        for (const Partition& p : partitions)
            if (p.sum() != degree)
                throw std::invalid_argument("partition " + p.str() + " does not sum to degree " +
                                            std::to_string(degree));
    }

    // Datum text form: bracket groups joined by commas.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < partitions.size(); ++i) {
            if (i) s += ',';
            s += partitions[i].str();
        }
        return s;
    }

    // Multiset-canonical form: partitions sorted, for keys and weak counting.
    std::string canonical_str() const {
        std::vector<Partition> ps = partitions;
        std::sort(ps.begin(), ps.end());
        std::string s;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (i) s += ',';
            s += ps[i].str();
        }
        return s;
    }
};

// Riemann-Hurwitz: chi(cover) - sum of lengths = d * (chi(sphere) - n),
// with chi(cover) = 2 - 2g and chi(sphere) = 2.
inline bool is_compatible(const BranchDatum& datum) {
    datum.validate();
    long long lensum = 0;
    for (const Partition& p : datum.partitions) lensum += p.length();
    return 2LL - 2 * datum.cover_genus - lensum ==
           static_cast<long long>(datum.degree) * (2 - datum.n());
}

// Genus forced by Riemann-Hurwitz for the given partitions, if it is a
// non-negative integer.
inline std::optional<int> inferred_genus(int degree, const std::vector<Partition>& partitions) {
    long long lensum = 0;
    for (const Partition& p : partitions) lensum += p.length();
    long long n = static_cast<long long>(partitions.size());
    long long twog = 2 - lensum - degree * (2 - n);
    if (twog < 0 || twog % 2 != 0) return std::nullopt;
    return static_cast<int>(twog / 2);
}

// Family parameters: degree d = 2k+1, partitions [2,...,2,1], [2,...,2,2h+1]
// and pi of length l, compatible iff h-l is odd and >= -1, g = (h-l+1)/2.
struct HeartParams {
    int k = 1;
    int h = 0;
    Partition pi;
};

inline BranchDatum heart_datum(const HeartParams& params) {
    int k = params.k, h = params.h;
    int l = params.pi.length();
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (h < 0) throw std::invalid_argument("h must be >= 0");
    if (h > k) throw std::invalid_argument("2h+1 exceeds degree 2k+1");
    int d = 2 * k + 1;
    if (params.pi.sum() != d)
        throw std::invalid_argument("pi must sum to 2k+1 = " + std::to_string(d));
    int hl = h - l;
    if (hl < -1 || ((hl % 2) + 2) % 2 == 0)
        throw std::invalid_argument("h - length(pi) must be odd and >= -1");
    BranchDatum datum;
    datum.cover_genus = (hl + 1) / 2;
    datum.degree = d;
    std::vector<int> p1(k, 2);
    p1.push_back(1);
    std::vector<int> p2(k - h, 2);
    p2.push_back(2 * h + 1);
    datum.partitions = {Partition(p1), Partition(p2), params.pi};
    return datum;
}

enum class ZieveStatus { applicable, gcd_obstruction, euclidean };

inline const char* to_string(ZieveStatus s) {
    switch (s) {
        case ZieveStatus::applicable: return "applicable";
        case ZieveStatus::gcd_obstruction: return "gcd_obstruction";
        case ZieveStatus::euclidean: return "euclidean";
    }
    return "?";
}

// `applicable` means the realizability criterion predicts a realization:
// every partition has GCD 1 and sum_j (1 - 1/lcm(pi_j)) != 2.
inline ZieveStatus zieve_status(const BranchDatum& datum) {
    for (const Partition& p : datum.partitions)
        if (p.gcd() > 1) return ZieveStatus::gcd_obstruction;
    // sum of (1 - 1/lcm_j) == 2  <=>  (n-2) * prod(lcm_j) == sum over j of
    // prod of the other lcms. Exact integer check.
    long long prod = 1;
    for (const Partition& p : datum.partitions) prod *= p.lcm();
    long long rhs = 0;
    for (const Partition& p : datum.partitions) rhs += prod / p.lcm();
    if (static_cast<long long>(datum.n() - 2) * prod == rhs) return ZieveStatus::euclidean;
    return ZieveStatus::applicable;
}

// --- datum text grammar ---------------------------------------------------
// datum    := group ("," group)+ | group
// group    := "[" int ("," int)* "]"
// Whitespace is permitted anywhere between tokens.

inline Partition parse_partition(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (i >= text.size() || text[i] != '[') throw std::invalid_argument("expected '['");
    ++i;
    std::vector<int> parts;
    while (true) {
        skip();
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("expected integer in partition");
        parts.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            break;
        }
        throw std::invalid_argument("expected ',' or ']' in partition");
    }
    skip();
    if (i != text.size()) throw std::invalid_argument("trailing characters after partition");
    return Partition(parts);
}

// Parse result before genus inference; `genus` is empty when Riemann-Hurwitz
// forces a fractional or negative value.
struct ParsedDatum {
    int degree = 0;
    std::vector<Partition> partitions;
    std::optional<int> genus;
};

// Parses "[..],[..],[..]". Throws only on malformed text or mismatched sums.
inline ParsedDatum parse_datum_parts(const std::string& text) {
    std::vector<Partition> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        if (i >= text.size()) break;
        if (text[i] != '[') throw std::invalid_argument("expected '[' at position " + std::to_string(i));
        std::size_t j = text.find(']', i);
        if (j == std::string::npos) throw std::invalid_argument("unterminated partition group");
        parts.push_back(parse_partition(text.substr(i, j - i + 1)));
        i = j + 1;
    }
    if (parts.empty()) throw std::invalid_argument("empty datum");
    int d = parts[0].sum();
    for (const Partition& p : parts)
        if (p.sum() != d) throw std::invalid_argument("partitions sum to different degrees");
    ParsedDatum out;
    out.degree = d;
    out.genus = inferred_genus(d, parts);
    out.partitions = std::move(parts);
    return out;
}

// As above but also requires a valid inferred genus.
inline BranchDatum parse_datum(const std::string& text) {
    ParsedDatum p = parse_datum_parts(text);
    BranchDatum datum{p.genus.value_or(0), p.degree, std::move(p.partitions)};
    if (!p.genus) throw std::invalid_argument("no valid covering genus for datum " + datum.str());
    return datum;
}

}  // namespace hurwitz
