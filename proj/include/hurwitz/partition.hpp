#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

// Partition of a positive integer, parts stored sorted descending.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int gcd() const {
        int g = 0;
        for (int p : parts_) g = std::gcd(g, p);
        return g;
    }

    long long lcm() const {
        long long l = 1;
        for (int p : parts_) l = std::lcm(l, static_cast<long long>(p));
        return l;
    }

    // number of parts equal to m
    int multiplicity(int m) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), m));
    }

    // |conjugacy class of this cycle type in S_d| = d! / prod(m^c_m * c_m!)
    long long class_size() const {
        long long n = 1;
        for (int i = 2; i <= sum(); ++i) n *= i;
        return n / centralizer_order();
    }

    // prod over distinct part values m of m^c_m * c_m!
    long long centralizer_order() const {
        long long z = 1;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            long long c = static_cast<long long>(j - i);
            for (long long t = 0; t < c; ++t) z *= parts_[i];
            for (long long t = 2; t <= c; ++t) z *= t;
            i = j;
        }
        return z;
    }

    // text form "[a,b,c]"
    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // descending-lex order on part vectors: [9] before [8,1] before [2,7]-canonicalized etc.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

private:
    std::vector<int> parts_;
};

// Yields every partition of d (optionally only those with <= max_len parts)
// exactly once, in descending lexicographic order. Deterministic.
inline void partitions_of(int d, const std::function<void(const Partition&)>& yield,
                          int max_len = -1) {
    if (d < 1) throw std::invalid_argument("partitions_of: d must be >= 1");
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            yield(Partition(cur));
            return;
        }
        if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
}

inline std::vector<Partition> all_partitions(int d, int max_len = -1) {
    std::vector<Partition> out;
    partitions_of(d, [&](const Partition& p) { out.push_back(p); }, max_len);
    return out;
}

}  // namespace hurwitz
