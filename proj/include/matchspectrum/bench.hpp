#pragma once

// Benchmark records comparing engines by exact operation counts and wall
// time. The digest columns (count mod 2^64 plus decimal digit count) let
// rows from different engines be cross-checked without printing full counts.

#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "matching_count.hpp"

namespace matchspectrum {

struct BenchRecord {
    std::string instance_id;
    int n = 0;
    int m = 0;
    double delta = 0.0;
    std::string engine;
    int u1_size = 0;
    int h = 0;
    std::uint64_t classes = 0;
    std::uint64_t sigma_ops = 0;
    std::uint64_t vector_adds = 0;
    double wall_ms = 0.0;
    std::uint64_t count_mod64 = 0;
    std::size_t count_digits = 0;
};

inline std::uint64_t low64(const BigInt& v) {
    BigInt r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), 64);
    return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

inline std::string bench_csv_header() {
    return "instance,n,m,delta,engine,u1_size,h,classes,sigma_ops,vector_adds,"
           "wall_ms,count_mod64,count_digits";
}

inline std::string bench_csv_row(const BenchRecord& r) {
    std::ostringstream os;
    os << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.delta << ','
       << r.engine << ',' << r.u1_size << ',' << r.h << ',' << r.classes << ','
       << r.sigma_ops << ',' << r.vector_adds << ',' << r.wall_ms << ','
       << r.count_mod64 << ',' << r.count_digits;
    return os.str();
}

// engine: bruteforce | halfenum | split | auto | ryser | enumerate
inline BenchRecord run_bench(const BipartiteGraph& g, const std::string& instance_id,
                             const std::string& engine, const CountOptions& opts = {}) {
    BenchRecord rec;
    rec.instance_id = instance_id;
    rec.n = g.left_count;
    rec.m = g.edge_count();
    rec.delta = g.left_count > 0
                    ? static_cast<double>(g.edge_count()) / static_cast<double>(g.left_count)
                    : 0.0;
    rec.engine = engine;

    const auto start = std::chrono::steady_clock::now();
    BigInt count;
    if (engine == "ryser") {
        count = g.is_balanced() ? ryser_permanent(biadjacency(g)) : BigInt(0);
    } else if (engine == "enumerate") {
        count = enumerate_perfect_matchings(g, opts.enumeration_cap);
    } else {
        CountEngine ce;
        if (engine == "bruteforce")
            ce = CountEngine::Bruteforce;
        else if (engine == "halfenum")
            ce = CountEngine::Halfenum;
        else if (engine == "split")
            ce = CountEngine::Split;
        else if (engine == "auto")
            ce = CountEngine::Auto;
        else
            throw std::invalid_argument("run_bench: unknown engine " + engine);
        CountResult res = count_perfect_matchings(g, ce, opts);
        count = res.count;
        rec.u1_size = res.split_u1_size;
        rec.h = res.split_h;
        rec.classes = res.stats.class_count;
        rec.sigma_ops = res.stats.sigma_applications;
        rec.vector_adds = res.stats.vector_additions;
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    rec.count_mod64 = low64(count);
    rec.count_digits = count.get_str().size();
    return rec;
}

}  // namespace matchspectrum
