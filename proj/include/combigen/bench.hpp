#pragma once

// Instrumented comparison harness: count-array permutations against a
// filter-and-dedupe baseline, and naive against pruned combinations. Work is
// reported through GenStats; wall time is reported but never asserted.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "combigen/comb.hpp"
#include "combigen/core.hpp"
#include "combigen/perm.hpp"

namespace combigen::bench {

enum class Kind { Permutation, Combination };

enum class Variant { CountArray, FilterDedupe, Naive, Pruned };

inline std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::CountArray: return "count-array";
    case Variant::FilterDedupe: return "filter-dedupe";
    case Variant::Naive: return "naive";
    case Variant::Pruned: return "pruned";
    }
    return "unknown";
}

struct Instance {
    std::string name;
    Kind kind = Kind::Permutation;
    InputList list;
    OrderSet order;
    std::size_t r = 1;
};

struct RunResult {
    GenStats stats;
    double elapsed_ms = 0.0;
};

/// Largest list the filter-and-dedupe baseline is run on in reports.
inline constexpr std::size_t baseline_max_n = 8;

namespace detail {

/// Places every occurrence in every slot (n!/(n-r)! leaves) and keeps the
/// distinct results. A leaf that repeats an earlier arrangement counts as a
/// wasteful branch.
class FilterDedupe {
public:
    FilterDedupe(const InputList& list, const OrderSet& order, std::size_t r)
        : used_(list.size(), false), r_(r) {
        for (const auto& t : list) positions_.push_back(order.index_of(t));
    }

    GenStats run() {
        visit();
        stats_.emissions = seen_.size();
        return stats_;
    }

private:
    void visit() {
        combigen::detail::bump(stats_.nodes_visited);
        if (out_.size() == r_) {
            if (!seen_.insert(out_).second) ++stats_.wasteful_branches;
            return;
        }
        for (std::size_t k = 0; k < used_.size(); ++k) {
            ++stats_.candidate_iterations;
            if (used_[k]) continue;
            used_[k] = true;
            out_.push_back(positions_[k]);
            visit();
            out_.pop_back();
            used_[k] = false;
        }
    }

    std::vector<std::size_t> positions_;
    std::vector<bool> used_;
    std::size_t r_;
    std::vector<std::size_t> out_;
    std::set<std::vector<std::size_t>> seen_;
    GenStats stats_{};
};

} // namespace detail

/// Runs one generator variant with a null sink and times it.
inline RunResult instrumented_run(Kind kind, const Instance& instance, Variant variant) {
    validate_instance(instance.list, instance.order, instance.r);
    auto null_sink = [](const EmissionView&) {};
    const auto start = std::chrono::steady_clock::now();
    GenStats stats;
    switch (kind) {
    case Kind::Permutation:
        if (variant == Variant::CountArray)
            stats = generate_permutations(instance.list, instance.order, instance.r, null_sink);
        else if (variant == Variant::FilterDedupe)
            stats = detail::FilterDedupe(instance.list, instance.order, instance.r).run();
        else
            throw std::invalid_argument("permutation runs take count-array or filter-dedupe");
        break;
    case Kind::Combination:
        if (variant == Variant::Naive)
            stats = generate_combinations(instance.list, instance.order, instance.r, CombMode::Multiset, null_sink);
        else if (variant == Variant::Pruned)
            stats = generate_combinations_pruned(instance.list, instance.order, instance.r, null_sink);
        else
            throw std::invalid_argument("combination runs take naive or pruned");
        break;
    }
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    return {stats, elapsed.count()};
}

struct Row {
    std::string instance;
    std::string variant;
    std::uint64_t emissions = 0;
    std::uint64_t nodes = 0;
    std::uint64_t wasteful = 0;
    double elapsed_ms = 0.0;
};

inline std::vector<Variant> variants_for(const Instance& instance) {
    if (instance.kind == Kind::Combination) return {Variant::Naive, Variant::Pruned};
    if (instance.list.size() <= baseline_max_n) return {Variant::CountArray, Variant::FilterDedupe};
    return {Variant::CountArray};
}

/// Runs every applicable variant of every instance, sequentially.
inline std::vector<Row> compare_report(std::span<const Instance> instances) {
    std::vector<Row> rows;
    for (const auto& inst : instances) {
        for (auto v : variants_for(inst)) {
            const auto res = instrumented_run(inst.kind, inst, v);
            rows.push_back({inst.name, std::string(to_string(v)), res.stats.emissions, res.stats.nodes_visited,
                            res.stats.wasteful_branches, res.elapsed_ms});
        }
    }
    return rows;
}

inline constexpr std::string_view csv_header = "instance,variant,emissions,nodes,wasteful,elapsed_ms";

inline void write_csv(std::ostream& os, std::span<const Row> rows) {
    os << csv_header << '\n';
    for (const auto& r : rows) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.elapsed_ms);
        os << r.instance << ',' << r.variant << ',' << r.emissions << ',' << r.nodes << ',' << r.wasteful << ','
           << ms << '\n';
    }
}

inline void write_table(std::ostream& os, std::span<const Row> rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %-14s %12s %14s %14s %12s\n", "instance", "variant", "emissions", "nodes",
                  "wasteful", "elapsed_ms");
    os << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-28s %-14s %12llu %14llu %14llu %12.3f\n", r.instance.c_str(),
                      r.variant.c_str(), static_cast<unsigned long long>(r.emissions),
                      static_cast<unsigned long long>(r.nodes), static_cast<unsigned long long>(r.wasteful),
                      r.elapsed_ms);
        os << line;
    }
}

inline Instance letters_instance(std::string name, Kind kind, std::size_t count, std::size_t r) {
    std::vector<Token> letters;
    for (std::size_t k = 0; k < count; ++k) letters.emplace_back(1, static_cast<char>('a' + k));
    return {std::move(name), kind, InputList(letters), OrderSet(letters), r};
}

/// (n-1) copies of `a` plus one `b`; its length-n permutations number n.
inline Instance repeated_a_instance(std::size_t n) {
    std::vector<Token> items(n - 1, "a");
    items.push_back("b");
    return {"repeated-a-n" + std::to_string(n), Kind::Permutation, InputList(items), OrderSet{"a", "b"}, n};
}

/// Random multisets with n <= 8 and p <= 4 drawn from a seeded generator;
/// the seed is part of each instance name.
inline std::vector<Instance> random_instances(std::uint32_t seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::vector<Instance> out;
    for (std::size_t k = 0; k < count; ++k) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        const auto p = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, n))(rng);
        std::vector<Token> alphabet;
        for (std::size_t i = 0; i < p; ++i) alphabet.emplace_back(1, static_cast<char>('a' + i));
        std::vector<Token> items(alphabet);  // every letter at least once
        while (items.size() < n) items.push_back(alphabet[std::uniform_int_distribution<std::size_t>(0, p - 1)(rng)]);
        std::shuffle(items.begin(), items.end(), rng);
        std::shuffle(alphabet.begin(), alphabet.end(), rng);
        const auto r = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        const auto base = "random-s" + std::to_string(seed) + "-" + std::to_string(k);
        out.push_back({base + "-perm", Kind::Permutation, InputList(items), OrderSet(alphabet), r});
        out.push_back({base + "-comb", Kind::Combination, InputList(items), OrderSet(alphabet), r});
    }
    return out;
}

inline constexpr std::uint32_t default_seed = 20240917;

/// Small worked instances, the repeated-a family n = 10..20, and seeded random
/// multisets.
inline std::vector<Instance> default_corpus(std::uint32_t seed = default_seed, std::size_t random_count = 12) {
    std::vector<Instance> corpus;
    corpus.push_back({"pairs-1122-r3", Kind::Permutation, InputList{"1", "1", "2", "2"}, OrderSet{"1", "2"}, 3});
    corpus.push_back(letters_instance("abc-r2", Kind::Combination, 3, 2));
    corpus.push_back(letters_instance("abcd-r3", Kind::Combination, 4, 3));
    corpus.push_back(letters_instance("distinct26-r26", Kind::Combination, 26, 26));
    for (std::size_t n = 10; n <= 20; ++n) corpus.push_back(repeated_a_instance(n));
    for (auto& inst : random_instances(seed, random_count)) corpus.push_back(std::move(inst));
    return corpus;
}

} // namespace combigen::bench
