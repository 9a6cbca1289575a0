#pragma once

/**
 * @file dioph_search.hpp
 * @brief Bounded brute-force solver for x^e + y^e + z^e = k with a
 *        mod-9 residue prefilter, plus a filtered-vs-unfiltered
 *        benchmark harness.
 *
 * The filter is derived from the three-power residue profile for the
 * configured exponent, never hard-coded, so it can only discard k
 * values whose residue is unattainable at every bound. Triples are
 * enumerated non-decreasing (z <= y <= x), which kills permutation
 * duplicates at generation time.
 */

#include <array>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "primal/conjecture.hpp"

namespace primal {

struct SearchConfig {
    std::int64_t k_min = 0;
    std::int64_t k_max = 0;
    std::int64_t bound = 1;          // per-variable radius, inclusive
    int exponent = 3;
    bool filter_enabled = true;
    int worker_count = 1;
    std::uint64_t candidate_ceiling = 1'000'000'000;
};

enum class KStatus { Solved, FilteredOut, Exhausted };

struct KResult {
    std::int64_t k = 0;
    KStatus status = KStatus::Exhausted;
    std::vector<std::array<std::int64_t, 3>> solutions;  // each ascending
};

struct SearchReport {
    SearchConfig config;
    std::vector<KResult> per_k;
    std::uint64_t candidates_examined = 0;
    std::uint64_t filter_skips = 0;
    std::int64_t elapsed_ms = 0;
};

struct BenchResult {
    SearchReport filtered;
    SearchReport unfiltered;
    bool solution_sets_equal = false;
    double candidate_ratio = 0.0;  // unfiltered / filtered candidates examined
    double wallclock_ratio = 0.0;
};

/// Refusal distinct from usage errors: the configured grid is too large.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// True iff k mod 9 is attainable by a sum of three e-th powers.
inline bool prefilter(std::int64_t k, int exponent) {
    const auto profile = three_power_profile(exponent);
    int r = static_cast<int>(((k % 9) + 9) % 9);
    return profile.attainable.count(r) > 0;
}

namespace detail {

inline void validate(const SearchConfig& c) {
    if (c.k_min > c.k_max) throw std::invalid_argument("search: k_min must be <= k_max");
    if (c.bound < 1) throw std::invalid_argument("search: bound must be >= 1");
    if (c.exponent < 2) throw std::invalid_argument("search: exponent must be >= 2");
    if (c.worker_count < 1) throw std::invalid_argument("search: worker_count must be >= 1");
    // 3 * bound^e must stay well inside int64
    std::int64_t limit = 1'500'000'000'000'000'000LL;
    std::int64_t p = 1;
    for (int i = 0; i < c.exponent; ++i) {
        if (p > limit / c.bound)
            throw std::invalid_argument("search: bound^exponent exceeds the integer range");
        p *= c.bound;
    }
}

inline std::uint64_t triples_per_k(std::int64_t bound) {
    std::uint64_t n = static_cast<std::uint64_t>(2 * bound + 1);
    return n * (n + 1) * (n + 2) / 6;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Full grid scan for one k. Also counts examined triples.
inline KResult scan_k(std::int64_t k, const SearchConfig& c,
                      const std::vector<std::int64_t>& powers,
                      std::uint64_t& examined) {
    KResult res;
    res.k = k;
    const std::int64_t b = c.bound;
    auto p = [&](std::int64_t v) { return powers[static_cast<std::size_t>(v + b)]; };
    for (std::int64_t z = -b; z <= b; ++z)
        for (std::int64_t y = z; y <= b; ++y) {
            std::int64_t zy = p(z) + p(y);
            for (std::int64_t x = y; x <= b; ++x) {
                ++examined;
                if (zy + p(x) == k) res.solutions.push_back({z, y, x});
            }
        }
    res.status = res.solutions.empty() ? KStatus::Exhausted : KStatus::Solved;
    return res;
}

} // namespace detail

inline SearchReport search(const SearchConfig& config) {
    detail::validate(config);
    auto t0 = std::chrono::steady_clock::now();

    SearchReport rep;
    rep.config = config;

    const auto profile = three_power_profile(config.exponent);
    auto attainable = [&](std::int64_t k) {
        return profile.attainable.count(static_cast<int>(((k % 9) + 9) % 9)) > 0;
    };

    // Decide per-k status up front so the resource guard sees the real
    // scan size and workers can split a fixed task list.
    std::vector<std::int64_t> to_scan;
    for (std::int64_t k = config.k_min; k <= config.k_max; ++k) {
        if (config.filter_enabled && !attainable(k)) {
            rep.per_k.push_back(KResult{k, KStatus::FilteredOut, {}});
            ++rep.filter_skips;
        } else {
            rep.per_k.push_back(KResult{k, KStatus::Exhausted, {}});
            to_scan.push_back(k);
        }
    }

    std::uint64_t grid = detail::triples_per_k(config.bound) * to_scan.size();
    if (grid > config.candidate_ceiling)
        throw ResourceLimitError("search: " + std::to_string(grid) +
                                 " candidates exceed the ceiling of " +
                                 std::to_string(config.candidate_ceiling));

    std::vector<std::int64_t> powers;
    for (std::int64_t v = -config.bound; v <= config.bound; ++v)
        powers.push_back(detail::ipow(v, config.exponent));

    // Workers take k-values by block; results land in fixed slots, so
    // the merged report does not depend on the worker count.
    std::vector<KResult> scanned(to_scan.size());
    std::vector<std::uint64_t> examined(static_cast<std::size_t>(config.worker_count), 0);
    auto run = [&](int w) {
        for (std::size_t i = w; i < to_scan.size();
             i += static_cast<std::size_t>(config.worker_count))
            scanned[i] = detail::scan_k(to_scan[i], config, powers, examined[w]);
    };
    if (config.worker_count == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < config.worker_count; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    for (auto e : examined) rep.candidates_examined += e;
    std::size_t next = 0;
    for (auto& kr : rep.per_k)
        if (kr.status != KStatus::FilteredOut) kr = scanned[next++];

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

/// The filter must be invisible in the solutions; a difference is an
/// internal soundness violation, reported rather than thrown.
inline BenchResult bench_compare(SearchConfig config) {
    BenchResult bench;
    config.filter_enabled = true;
    bench.filtered = search(config);
    config.filter_enabled = false;
    bench.unfiltered = search(config);

    bench.solution_sets_equal = true;
    for (std::size_t i = 0; i < bench.filtered.per_k.size(); ++i)
        if (bench.filtered.per_k[i].solutions != bench.unfiltered.per_k[i].solutions)
            bench.solution_sets_equal = false;

    if (bench.filtered.candidates_examined > 0)
        bench.candidate_ratio =
            static_cast<double>(bench.unfiltered.candidates_examined) /
            static_cast<double>(bench.filtered.candidates_examined);
    if (bench.filtered.elapsed_ms > 0)
        bench.wallclock_ratio = static_cast<double>(bench.unfiltered.elapsed_ms) /
                                static_cast<double>(bench.filtered.elapsed_ms);
    return bench;
}

} // namespace primal
