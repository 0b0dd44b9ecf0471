#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hurwitz/datum.hpp"
#include "hurwitz/equivalence.hpp"

namespace hurwitz {

struct ScanRecord {
    BranchDatum datum;
    long long nu = 0;
    ZieveStatus zieve = ZieveStatus::applicable;
    long long elapsed_ms = 0;
};

struct ScanOptions {
    int genus_max = 1000;    // effectively unbounded; RH caps the genus anyway
    bool deep = false;       // lifts the degree cap from 9 to 11 with pruning
    int degree_cap = 9;
    int deep_degree_cap = 11;
    bool override_cap = false;
    int threads = 1;  // data are independent; results are merged by index
};

namespace detail {

// Deep scans are restricted to data where some partition is [d] or is made of
// 2s with at most one odd part, which keeps class sizes manageable.
inline bool deep_shape_ok(const std::vector<Partition>& ps) {
    for (const Partition& p : ps) {
        if (p.length() == 1) return true;
        int non2 = 0;
        for (int x : p.parts())
            if (x != 2) ++non2;
        if (non2 <= 1) return true;
    }
    return false;
}

}  // namespace detail

// All compatible 3-partition data of degree d (one per partition multiset),
// with their weak Hurwitz numbers and realizability-criterion status.
// Output is sorted by canonical datum string; nu = 0 entries are the
// candidate exceptional data.
inline std::vector<BranchDatum> compatible_data(int d, const ScanOptions& opt = {}) {
    if (d < 2) throw std::invalid_argument("scan_degree: d must be >= 2");
    int cap = opt.deep ? opt.deep_degree_cap : opt.degree_cap;
    if (d > cap && !opt.override_cap)
        throw std::invalid_argument("degree " + std::to_string(d) +
                                    " exceeds the scan cap; pass the override flag");

    std::vector<Partition> parts = all_partitions(d);
    std::vector<BranchDatum> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j < parts.size(); ++j)
            for (std::size_t l = j; l < parts.size(); ++l) {
                std::vector<Partition> ps{parts[i], parts[j], parts[l]};
                auto g = inferred_genus(d, ps);
                if (!g || *g > opt.genus_max) continue;
                if (opt.deep && d > opt.degree_cap && !detail::deep_shape_ok(ps)) continue;
                out.push_back(BranchDatum{*g, d, std::move(ps)});
            }
    std::sort(out.begin(), out.end(), [](const BranchDatum& a, const BranchDatum& b) {
        return a.canonical_str() < b.canonical_str();
    });
    return out;
}

inline std::vector<ScanRecord> scan_degree(int d, const ScanOptions& opt = {}) {
    std::vector<BranchDatum> data = compatible_data(d, opt);
    std::vector<ScanRecord> out(data.size());
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < data.size(); i += step) {
            ScanRecord& rec = out[i];
            rec.datum = data[i];
            auto t0 = std::chrono::steady_clock::now();
            rec.nu = weak_count(rec.datum).nu;
            auto t1 = std::chrono::steady_clock::now();
            rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            rec.zieve = zieve_status(rec.datum);
        }
    };
    int nthreads = std::max(1, opt.threads);
    if (nthreads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(nthreads));
        for (std::thread& t : pool) t.join();
    }
    return out;  // already in canonical-string order; merge is by index
}

struct ConjectureReport {
    // nu = 0 data whose degree is prime: findings against the prime-degree
    // conjecture (expected empty).
    std::vector<ScanRecord> prime_degree_violations;
    // nu = 0 data the GCD/Euclidean excuses do not cover: findings against
    // the stronger realizability criterion (expected empty).
    std::vector<ScanRecord> criterion_violations;
    std::vector<ScanRecord> exceptional;  // all nu = 0 entries

    bool clean() const { return prime_degree_violations.empty() && criterion_violations.empty(); }
};

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

inline ConjectureReport conjecture_report(const std::vector<ScanRecord>& scan) {
    ConjectureReport rep;
    for (const ScanRecord& r : scan) {
        if (r.nu != 0) continue;
        rep.exceptional.push_back(r);
        if (is_prime(r.datum.degree)) rep.prime_degree_violations.push_back(r);
        if (r.zieve == ZieveStatus::applicable) rep.criterion_violations.push_back(r);
    }
    return rep;
}

}  // namespace hurwitz
