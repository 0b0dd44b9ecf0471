#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hurwitz {
namespace formulas {

// floor(x/2) for any integer x (arguments here are non-negative in range)
constexpr long long half(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// [(x/2)^2] = floor(x^2/4)
constexpr long long quarter_square(long long x) { return x * x / 4; }

// --- genus 0 ----------------------------------------------------------------

// [2,...,2,1],[2,...,2,1],[2k+1] and [2,...,2,1],[2,...,2,3],[p,q]: a single
// realization in both families.
constexpr long long nu_g0_h0() { return 1; }
constexpr long long nu_g0_h1() { return 1; }

// Case split for [p,q,r] with p >= q >= r against k: first letter compares
// p,q; second q,r (G for >, E for =); the suffix compares p with k (G for >,
// L for <=). EE and EG force p <= k, so they carry no suffix.
enum class CaseTag { EE, EG, GE_G, GE_L, GG_G, GG_L };

inline CaseTag classify_g0_h2(long long k, long long p, long long q, long long r) {
    if (p < q || q < r || r < 1) throw std::invalid_argument("need p >= q >= r >= 1");
    if (p + q + r != 2 * k + 1) throw std::invalid_argument("p+q+r must equal 2k+1");
    if (p == q && q == r) return CaseTag::EE;
    if (p == q) return CaseTag::EG;  // p = q > r forces p <= k
    if (q == r) return p > k ? CaseTag::GE_G : CaseTag::GE_L;
    return p > k ? CaseTag::GG_G : CaseTag::GG_L;
}

struct G0H2Counts {
    long long count_I = 0;   // 1 if p > k else 0
    long long count_II = 0;  // 0, 1 or 3 per case
    long long total() const { return count_I + count_II; }
};

// Per-embedding counts for [2,...,2,1],[2,...,2,5],[p,q,r].
inline G0H2Counts claim_counts_g0_h2(long long k, long long p, long long q, long long r) {
    G0H2Counts c;
    switch (classify_g0_h2(k, p, q, r)) {
        case CaseTag::EE: c = {0, 0}; break;
        case CaseTag::EG: c = {0, 1}; break;
        case CaseTag::GE_G: c = {1, 0}; break;
        case CaseTag::GE_L: c = {0, 1}; break;
        case CaseTag::GG_G: c = {1, 1}; break;
        case CaseTag::GG_L: c = {0, 3}; break;
    }
    return c;
}

// nu for [2,...,2,1],[2,...,2,5],[p,q,r]: 0 / 1 / 2 / 3.
inline long long nu_g0_h2(long long k, long long p, long long q, long long r) {
    std::array<long long, 3> s{p, q, r};
    std::sort(s.begin(), s.end(), std::greater<long long>());
    return claim_counts_g0_h2(k, s[0], s[1], s[2]).total();
}

// --- genus 1 ----------------------------------------------------------------

// nu for [2,...,2,1],[2,...,2,5],[2k+1] = [(k/2)^2]
inline long long nu_g1_h2(long long k) {
    if (k < 2) throw std::invalid_argument("nu_g1_h2 requires k >= 2");
    return quarter_square(k);
}

// Intermediate sums of the torus embedding counts, kept as named helpers so
// their boundary behavior can be pinned by tests.
// eq_2: first half of the type-I count; vanishes for 2k-4 < p <= 2k.
inline long long eq_2(long long k, long long p) {
    long long m = k - 2 - half(p + 1);
    return quarter_square(m) + (k - 1 - half(p + 1));
}
// eq_3: value of the second type-I system at p = k+1.
inline long long eq_3(long long k) { return quarter_square(half(k)); }
// eq_4: second half of the type-I count; equals eq_3 at p = k+1, 0 at p = 2k.
inline long long eq_4(long long k, long long p) {
    long long m = half(p - 1);
    return quarter_square(m - 2) - quarter_square(p - k - 3) + m - p + k + 1;
}
// eq_8, eq_9: the two halves of the type-V count; eq_8 vanishes for
// 2k-2 <= p <= 2k, eq_9 for 2k-1 <= p <= 2k.
inline long long eq_8(long long k, long long p) {
    long long m = half(p - 1);
    long long num = m * m - m * (2 * p - 2 * k - 1) + (p - k - 1) * (p - k);
    if (num % 2 != 0) throw std::logic_error("eq_8: non-integral count");
    return num / 2;
}
inline long long eq_9(long long k, long long p) {
    long long m = half(p);
    long long num = m * m - m * (2 * p - 2 * k - 1) + (p - k - 1) * (p - k);
    if (num % 2 != 0) throw std::logic_error("eq_9: non-integral count");
    return num / 2;
}

struct G1H3Counts {
    // realizations of [p,q] through each of the seven torus embeddings
    long long I = 0, II = 0, III = 0, IV = 0, V = 0, VI = 0, VII = 0;
    long long total() const { return I + II + III + IV + V + VI + VII; }
};

// Per-embedding counts for [2,...,2,1],[2,...,2,7],[p,q] with p > q,
// i.e. k+1 <= p <= 2k and q = 2k+1-p.
inline G1H3Counts claim_counts_g1_h3(long long k, long long p) {
    if (p < k + 1 || p > 2 * k) throw std::invalid_argument("need k+1 <= p <= 2k");
    G1H3Counts c;
    c.I = quarter_square(k - half(p + 1)) + quarter_square(half(p - 1)) -
          quarter_square(p - k - 1);
    c.II = (p - k - 1) * (p - k - 2) / 2;
    c.III = c.II;
    c.IV = quarter_square(p - k - 1);
    c.V = half(p) * half(p) - (p - 1) * half(p) - k * (p - k) + p * (p - 1) / 2;
    c.VI = (2 * k - p) * (p - k - 1);
    c.VII = p * p / 4 - k * (p - k);
    return c;
}

// The six-term bracket formula for [2,...,2,1],[2,...,2,7],[p,q], before the
// k=4, p=7 duality correction.
inline long long nu_g1_h3_uncorrected(long long k, long long p) {
    if (p < k + 1 || p > 2 * k) throw std::invalid_argument("need k+1 <= p <= 2k");
    return quarter_square(k - half(p + 1)) + quarter_square(half(p - 1)) +
           half(p) * half(p) - (p - 1) * half(p) + p * p / 4 + k * k - k * (p - 1) +
           (p - 1) * (p - 4) / 2;
}

inline long long nu_g1_h3(long long k, long long p) {
    if (k == 4 && p == 7) return 5;  // duality identification, see weak_count
    return nu_g1_h3_uncorrected(k, p);
}

// --- genus 2 ----------------------------------------------------------------

constexpr long long binom4(long long k) {
    return k < 4 ? 0 : k * (k - 1) * (k - 2) * (k - 3) / 24;
}

// 5-tuples (a,b,c,d,e) >= 0 with sum k-4, counted up to the symmetry
// (a,b,c,d,e) <-> (b,a,d,c,e). Direct enumeration.
inline long long g2_symmetric_tuple_count(long long k) {
    if (k < 4) return 0;
    long long s = k - 4;
    long long count = 0;
    for (long long a = 0; a <= s; ++a)
        for (long long b = 0; b <= s - a; ++b)
            for (long long c = 0; c <= s - a - b; ++c)
                for (long long d = 0; d <= s - a - b - c; ++d) {
                    // e = s-a-b-c-d; keep orbit representatives only
                    std::array<long long, 4> t{a, b, c, d}, u{b, a, d, c};
                    if (t <= u) ++count;
                }
    return count;
}

struct G2Decomposition {
    long long asymmetric = 0;  // 8 * C(k,4)
    long long symmetric = 0;   // 5 * symmetric tuple count
    long long total() const { return asymmetric + symmetric; }
};

inline G2Decomposition nu_g2_decomposition(long long k) {
    if (k < 4) return {0, 0};
    return {8 * binom4(k), 5 * g2_symmetric_tuple_count(k)};
}

// nu for [2,...,2,1],[2,...,2,9],[2k+1] before the k=4 duality correction:
// k/16 (7k^3 - 42k^2 + 72k - 37) + 5/8 (2k-3) [k/2], exact over 16.
inline long long nu_g2_h4_uncorrected(long long k) {
    if (k < 4) throw std::invalid_argument("nu_g2_h4 requires k >= 4");
    long long num = k * (7 * k * k * k - 42 * k * k + 72 * k - 37) +
                    10 * (2 * k - 3) * half(k);
    if (num % 16 != 0) throw std::logic_error("nu_g2_h4: non-integral value");
    return num / 16;
}

inline long long nu_g2_h4(long long k) {
    if (k == 4) return 10;  // three duality identifications, see weak_count
    return nu_g2_h4_uncorrected(k);
}

}  // namespace formulas
}  // namespace hurwitz
