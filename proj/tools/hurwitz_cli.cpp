// hurwitz: branched covers of the sphere with three branching points.
//
// Subcommands: check, count, formula, scan, dessin. All output is JSON on
// stdout (pretty-printed with --pretty); scan writes JSON-lines.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "hurwitz/characters.hpp"
#include "hurwitz/datum.hpp"
#include "hurwitz/dessin.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/equivalence.hpp"
#include "hurwitz/formulas.hpp"
#include "hurwitz/scanner.hpp"

using json = nlohmann::ordered_json;

namespace {

// bump whenever counting semantics change; stale cache entries are ignored
constexpr const char* kVersionTag = "hurwitz-1";

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

json partitions_json(const hurwitz::BranchDatum& d) {
    json arr = json::array();
    for (const auto& p : d.partitions) {
        json pj = json::array();
        for (int x : p.parts()) pj.push_back(x);
        arr.push_back(pj);
    }
    return arr;
}

// --- result cache (JSON-lines keyed by canonical datum + mode + version) ----

struct Cache {
    std::string path;

    std::string key(const hurwitz::BranchDatum& d, const std::string& mode) const {
        return d.canonical_str() + "|" + mode + "|" + kVersionTag;
    }

    std::optional<long long> lookup(const std::string& k) const {
        if (path.empty()) return std::nullopt;
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            if (j.value("key", "") == k) return j.value("count", 0LL);
        }
        return std::nullopt;
    }

    void store(const std::string& k, long long count) const {
        if (path.empty()) return;
        std::ofstream out(path, std::ios::app);
        json j;
        j["key"] = k;
        j["count"] = count;
        out << j.dump() << "\n";
    }
};

std::string default_cache_path() {
    const char* env = std::getenv("HURWITZ_CACHE");
    return env ? env : "";
}

json scan_record_json(const hurwitz::ScanRecord& r, bool timing) {
    json j;
    j["partitions"] = partitions_json(r.datum);
    j["degree"] = r.datum.degree;
    j["genus"] = r.datum.cover_genus;
    j["nu"] = r.nu;
    j["zieve"] = hurwitz::to_string(r.zieve);
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz numbers of sphere covers with three branching points"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable JSON");

    // check
    auto* check = app.add_subcommand("check", "compatibility and realizability-criterion status");
    std::string check_datum;
    check->add_option("datum", check_datum, "e.g. \"[2,2,1],[2,3],[2,3]\"")->required();

    // count
    auto* count = app.add_subcommand("count", "weak or strong Hurwitz number");
    std::string count_datum, count_mode = "weak", cache_path = default_cache_path();
    bool with_classes = false;
    count->add_option("datum", count_datum)->required();
    count->add_option("--mode", count_mode)->check(CLI::IsMember({"weak", "strong"}));
    count->add_flag("--classes", with_classes, "include class representatives in cycle notation");
    count->add_option("--cache", cache_path, "JSON-lines result cache (default $HURWITZ_CACHE)");

    // formula
    auto* formula = app.add_subcommand("formula", "closed-form counts for the near-2 families");
    std::string family;
    long long fk = 0, fp = 0;
    std::string pqr;
    formula->add_option("family", family)->required()->check(
        CLI::IsMember({"g0h2", "g1h2", "g1h3", "g2h4"}));
    formula->add_option("--k", fk)->required();
    formula->add_option("--p", fp);
    formula->add_option("--pqr", pqr, "comma-separated p,q,r for g0h2");

    // scan
    auto* scan = app.add_subcommand("scan", "sweep all compatible data of one degree");
    int scan_degree_arg = 0, genus_max = 1000;
    bool deep = false, force = false, no_timing = false;
    std::string out_file;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    scan->add_option("--degree", scan_degree_arg)->required();
    scan->add_option("--genus-max", genus_max);
    scan->add_flag("--deep", deep, "allow degree up to 11 (pruned shapes only)");
    scan->add_flag("--force", force, "override the degree cap");
    scan->add_flag("--no-timing", no_timing, "omit elapsed_ms for reproducible output");
    scan->add_option("--out", out_file, "JSON-lines output file (default stdout)");
    scan->add_option("--threads", threads);

    // dessin
    auto* dessin = app.add_subcommand("dessin", "export bipartite graphs per weak class");
    std::string dessin_datum, emit_format = "dot", out_prefix = "dessin";
    dessin->add_option("datum", dessin_datum)->required();
    dessin->add_option("--emit", emit_format)->check(CLI::IsMember({"dot", "json"}));
    dessin->add_option("--out", out_prefix, "output file prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            hurwitz::ParsedDatum p;
            try {
                p = hurwitz::parse_datum_parts(check_datum);
            } catch (const std::exception& e) {
                json j;
                j["error"] = e.what();
                emit(j, pretty);
                return 2;
            }
            // enumeration and the counting formulas cover n = 3 only; other n
            // are reported as incompatible
            bool compatible = p.genus.has_value() && p.partitions.size() == 3;
            json j;
            j["datum"] = check_datum;
            j["degree"] = p.degree;
            j["n"] = p.partitions.size();
            j["compatible"] = compatible;
            if (p.genus) j["genus"] = *p.genus;
            if (compatible) {
                hurwitz::BranchDatum d{*p.genus, p.degree, p.partitions};
                j["zieve"] = hurwitz::to_string(hurwitz::zieve_status(d));
            }
            emit(j, pretty);
            return compatible ? 0 : 1;
        }

        if (*count) {
            hurwitz::BranchDatum d = hurwitz::parse_datum(count_datum);
            if (!hurwitz::is_compatible(d) || d.n() != 3) {
                json j;
                j["error"] = "incompatible datum";
                emit(j, pretty);
                return 1;
            }
            Cache cache{cache_path};
            std::string key = cache.key(d, count_mode);
            json j;
            j["degree"] = d.degree;
            j["genus"] = d.cover_genus;
            j["partitions"] = partitions_json(d);
            j["mode"] = count_mode;
            if (auto hit = cache.lookup(key); hit && !with_classes) {
                j["count"] = *hit;
                j["cached"] = true;
                emit(j, pretty);
                return 0;
            }
            long long raw_count = 0;
            if (count_mode == "strong") {
                hurwitz::StrongClassSet s = hurwitz::enumerate_strong(d);
                j["count"] = s.class_count();
                j["tuple_count"] = s.tuple_count;
                raw_count = s.raw_tuple_count;
                if (with_classes) {
                    json reps = json::array();
                    for (const auto& cls : s.classes)
                        reps.push_back({cls.rep.g[0].str(), cls.rep.g[1].str(), cls.rep.g[2].str()});
                    j["classes"] = reps;
                }
                cache.store(key, s.class_count());
            } else {
                hurwitz::WeakClassSet w = hurwitz::weak_count(d);
                j["count"] = w.nu;
                j["tuple_count"] = w.tuple_count;
                raw_count = w.raw_tuple_count;
                if (with_classes) {
                    json reps = json::array();
                    for (const auto& rep : w.reps)
                        reps.push_back({rep.g[0].str(), rep.g[1].str(), rep.g[2].str()});
                    j["classes"] = reps;
                }
                cache.store(key, w.nu);
            }
            long long frob = hurwitz::frobenius_tuple_count(d.partitions[0], d.partitions[1],
                                                            d.partitions[2]);
            j["frobenius_check"] = (frob == raw_count) ? "pass" : "fail";
            emit(j, pretty);
            return j["frobenius_check"] == "pass" ? 0 : 3;
        }

        if (*formula) {
            namespace f = hurwitz::formulas;
            json j;
            j["family"] = family;
            j["k"] = fk;
            if (family == "g0h2") {
                std::vector<long long> v;
                std::stringstream ss(pqr);
                std::string tok;
                while (std::getline(ss, tok, ',')) v.push_back(std::stoll(tok));
                if (v.size() != 3) throw std::invalid_argument("g0h2 needs --pqr p,q,r");
                j["pqr"] = v;
                j["value"] = f::nu_g0_h2(fk, v[0], v[1], v[2]);
            } else if (family == "g1h2") {
                j["value"] = f::nu_g1_h2(fk);
            } else if (family == "g1h3") {
                if (fp == 0) throw std::invalid_argument("g1h3 needs --p");
                j["p"] = fp;
                j["value"] = f::nu_g1_h3(fk, fp);
                j["uncorrected"] = f::nu_g1_h3_uncorrected(fk, fp);
            } else {
                j["value"] = f::nu_g2_h4(fk);
                j["uncorrected"] = f::nu_g2_h4_uncorrected(fk);
            }
            emit(j, pretty);
            return 0;
        }

        if (*scan) {
            hurwitz::ScanOptions opt;
            opt.genus_max = genus_max;
            opt.deep = deep;
            opt.override_cap = force;
            opt.threads = std::max(1, threads);
            auto records = hurwitz::scan_degree(scan_degree_arg, opt);
            std::ostringstream lines;
            for (const auto& r : records) lines << scan_record_json(r, !no_timing).dump() << "\n";
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << lines.str();
            } else {
                std::cout << lines.str();
            }
            auto rep = hurwitz::conjecture_report(records);
            json j;
            j["degree"] = scan_degree_arg;
            j["data"] = records.size();
            j["exceptional"] = rep.exceptional.size();
            json pv = json::array(), cv = json::array();
            for (const auto& r : rep.prime_degree_violations) pv.push_back(scan_record_json(r, false));
            for (const auto& r : rep.criterion_violations) cv.push_back(scan_record_json(r, false));
            j["prime_degree_violations"] = pv;
            j["criterion_violations"] = cv;
            j["clean"] = rep.clean();
            if (!out_file.empty()) emit(j, pretty);
            return rep.clean() ? 0 : 4;
        }

        if (*dessin) {
            hurwitz::BranchDatum d = hurwitz::parse_datum(dessin_datum);
            if (!hurwitz::is_compatible(d) || d.n() != 3) {
                json j;
                j["error"] = "incompatible datum";
                emit(j, pretty);
                return 1;
            }
            hurwitz::WeakClassSet w = hurwitz::weak_count(d);
            json index;
            index["datum"] = d.str();
            index["nu"] = w.nu;
            json files = json::array();
            for (std::size_t i = 0; i < w.reps.size(); ++i) {
                hurwitz::Dessin dd = hurwitz::dessin_of(w.reps[i]);
                json side;
                side["degree"] = dd.degree;
                side["black"] = dd.black;
                side["white"] = dd.white;
                side["regions"] = dd.regions;
                std::string base = out_prefix + "_class" + std::to_string(i);
                if (emit_format == "dot") {
                    std::ofstream(base + ".dot") << hurwitz::dessin_to_dot(dd);
                    std::ofstream(base + ".json") << side.dump(2) << "\n";
                    files.push_back({base + ".dot", base + ".json"});
                } else {
                    std::ofstream(base + ".json") << side.dump(2) << "\n";
                    files.push_back(base + ".json");
                }
            }
            index["files"] = files;
            emit(index, pretty);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        json j;
        j["error"] = e.what();
        emit(j, pretty);
        return 2;
    } catch (const std::exception& e) {
        json j;
        j["error"] = e.what();
        emit(j, pretty);
        return 5;
    }
    return 0;
}
