#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// Permutation of {0,...,d-1} internally; all text I/O is 1-based.
//
// Composition is left-to-right throughout: (a*b)(x) = b(a(x)), so a
// constellation condition reads "apply g1, then g2, then g3 gives identity".
class Perm {
public:
    Perm() = default;

    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("not a bijection");
            seen[v] = 1;
        }
    }

    static Perm identity(int d) {
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        return Perm(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
        return Perm(std::move(inv));
    }

    // (a*b)(x) = b(a(x))
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
        std::vector<int> img(a.img_.size());
        for (int i = 0; i < a.degree(); ++i) img[i] = b.img_[a.img_[i]];
        return Perm(std::move(img));
    }

    // Conjugate of a by h: maps h(i) -> h(a(i)), i.e. h^-1 * a * h in the
    // left-to-right product. Relabels the cycles of a via h.
    Perm conjugate_by(const Perm& h) const {
        std::vector<int> img(img_.size());
        for (int i = 0; i < degree(); ++i) img[h.img_[i]] = h.img_[img_[i]];
        return Perm(std::move(img));
    }

    Partition cycle_type() const {
        std::vector<int> lens;
        std::vector<char> seen(img_.size(), 0);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                ++len;
            }
            lens.push_back(len);
        }
        return Partition(std::move(lens));
    }

    int cycle_count() const {
        int n = 0;
        std::vector<char> seen(img_.size(), 0);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            ++n;
            for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
        }
        return n;
    }

    // Cycle notation, 1-based, fixed points omitted, identity printed "()".
    std::string str() const {
        std::ostringstream os;
        std::vector<char> seen(img_.size(), 0);
        bool any = false;
        for (int i = 0; i < degree(); ++i) {
            if (seen[i] || img_[i] == i) continue;
            any = true;
            os << '(';
            bool first = true;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                if (!first) os << ' ';
                os << (j + 1);
                first = false;
            }
            os << ')';
        }
        if (!any) return "()";
        return os.str();
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

struct PermHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
    std::size_t operator()(const Perm& p) const { return (*this)(p.images()); }
};

// The permutation whose cycles are consecutive integer blocks in descending
// part order: type [3,2] on d=5 gives (1 2 3)(4 5).
inline Perm canonical_of_type(const Partition& t) {
    int d = t.sum();
    std::vector<int> img(d);
    int s = 0;
    for (int m : t.parts()) {
        for (int i = 0; i < m; ++i) img[s + i] = s + (i + 1) % m;
        s += m;
    }
    return Perm(std::move(img));
}

// Generating set of the centralizer of a canonical_of_type permutation:
// one rotation per cycle of length > 1, plus one swap per adjacent pair of
// equal-length cycle blocks. Generated order = prod(m^c_m * c_m!).
inline std::vector<Perm> centralizer_generators(const Perm& a) {
    const Partition t = a.cycle_type();
    if (a != canonical_of_type(t))
        throw std::invalid_argument("centralizer_generators: input must be canonical_of_type");
    int d = a.degree();
    std::vector<Perm> gens;
    const auto& parts = t.parts();
    int s = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int m = parts[i];
        if (m > 1) {
            std::vector<int> img(d);
            std::iota(img.begin(), img.end(), 0);
            for (int j = 0; j < m; ++j) img[s + j] = s + (j + 1) % m;
            gens.emplace_back(std::move(img));
        }
        if (i + 1 < parts.size() && parts[i + 1] == m) {
            std::vector<int> img(d);
            std::iota(img.begin(), img.end(), 0);
            for (int j = 0; j < m; ++j) std::swap(img[s + j], img[s + m + j]);
            gens.emplace_back(std::move(img));
        }
        s += m;
    }
    return gens;
}

// True iff the group generated has a single orbit on {0,...,d-1}.
// Union-find over the edges i -> g(i).
inline bool is_transitive(const std::vector<const Perm*>& gens, int d) {
    if (d <= 1) return true;
    if (gens.empty()) return false;
    std::vector<int> uf(d);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    int comps = d;
    for (const Perm* g : gens) {
        if (g->degree() != d) throw std::invalid_argument("degree mismatch");
        for (int i = 0; i < d; ++i) {
            int a = find(i), b = find((*g)(i));
            if (a != b) {
                uf[a] = b;
                --comps;
            }
        }
    }
    return comps == 1;
}

inline bool is_transitive(const std::vector<Perm>& gens, int d) {
    std::vector<const Perm*> ptrs;
    ptrs.reserve(gens.size());
    for (const Perm& g : gens) ptrs.push_back(&g);
    return is_transitive(ptrs, d);
}

// Yields every permutation of cycle type t in S_d exactly once, as a reused
// image buffer (callers copy if they keep it). Cycles are built in order of
// their minimal elements, which makes the stream deterministic.
inline void iterate_class(const Partition& t, const std::function<void(const std::vector<int>&)>& yield) {
    int d = t.sum();
    std::vector<int> img(d, -1);
    std::vector<char> used(d, 0);
    std::vector<int> remaining(t.parts());  // multiset of cycle lengths still to place

    auto rec = [&](auto&& self) -> void {
        int start = -1;
        for (int i = 0; i < d; ++i)
            if (!used[i]) {
                start = i;
                break;
            }
        if (start < 0) {
            yield(img);
            return;
        }
        for (std::size_t li = 0; li < remaining.size(); ++li) {
            if (li > 0 && remaining[li] == remaining[li - 1]) continue;  // distinct values only
            int len = remaining[li];
            remaining.erase(remaining.begin() + li);
            // build a cycle of this length whose minimal element is `start`
            std::vector<int> cyc{start};
            used[start] = 1;
            auto build = [&](auto&& bself, int need) -> void {
                if (need == 0) {
                    for (std::size_t j = 0; j < cyc.size(); ++j)
                        img[cyc[j]] = cyc[(j + 1) % cyc.size()];
                    self(self);
                    for (int c : cyc) img[c] = -1;
                    return;
                }
                for (int nxt = start + 1; nxt < d; ++nxt) {
                    if (used[nxt]) continue;
                    used[nxt] = 1;
                    cyc.push_back(nxt);
                    bself(bself, need - 1);
                    cyc.pop_back();
                    used[nxt] = 0;
                }
            };
            build(build, len - 1);
            used[start] = 0;
            remaining.insert(remaining.begin() + li, len);
        }
    };
    rec(rec);
}

}  // namespace hurwitz
