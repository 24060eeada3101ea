#pragma once

// Helpers shared by the unit, property and acceptance suites: sinks that
// collect emissions, seeded random instances, and the order-following checks.

#include <random>
#include <string>
#include <vector>

#include "combigen/combigen.hpp"
#include "combigen/oracle.hpp"

namespace combigen::testing {

struct Collected {
    std::vector<Emission> emissions;
    GenStats stats;
};

/// `run` receives a sink and returns the run's GenStats.
template <class Run>
Collected collect(Run&& run) {
    Collected c;
    c.stats = run([&](const EmissionView& e) { c.emissions.push_back(e.tokens()); });
    return c;
}

struct CollectedParts {
    std::vector<std::vector<Part>> emissions;
    GenStats stats;
};

template <class Run>
CollectedParts collect_parts(Run&& run) {
    CollectedParts c;
    c.stats = run([&](std::span<const Part> e) { c.emissions.emplace_back(e.begin(), e.end()); });
    return c;
}

/// Splits "abc" into single-character tokens; handy for literal expectations.
inline Emission chars(const std::string& s) {
    Emission e;
    for (char ch : s) e.emplace_back(1, ch);
    return e;
}

inline std::vector<Emission> chars_list(std::initializer_list<const char*> items) {
    std::vector<Emission> out;
    for (auto s : items) out.push_back(chars(s));
    return out;
}

inline std::vector<std::vector<std::size_t>> positions(const OrderSet& order, const std::vector<Emission>& es) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& e : es) out.push_back(oracle::positions_of(order, e));
    return out;
}

inline std::vector<std::vector<std::size_t>> positions(const PartsSet& parts,
                                                       const std::vector<std::vector<Part>>& es) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& e : es) {
        std::vector<std::size_t> pos;
        for (auto v : e) pos.push_back(parts.index_of(v));
        out.push_back(std::move(pos));
    }
    return out;
}

/// Number of pairs (a, b), a before b, for which the earlier emission does not
/// hold the smaller order position at the discriminating index (or, for
/// prefix-related emissions of different length, is not the shorter one).
inline std::uint64_t order_violations_all_pairs(const std::vector<std::vector<std::size_t>>& seq) {
    std::uint64_t bad = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b) {
            const auto& x = seq[a];
            const auto& y = seq[b];
            const auto common = std::min(x.size(), y.size());
            std::size_t d = 0;
            while (d < common && x[d] == y[d]) ++d;
            const bool ok = d < common ? x[d] < y[d] : x.size() < y.size();
            if (!ok) ++bad;
        }
    return bad;
}

inline std::uint64_t order_violations_adjacent(const std::vector<std::vector<std::size_t>>& seq) {
    std::uint64_t bad = 0;
    for (std::size_t a = 0; a + 1 < seq.size(); ++a)
        if (oracle::compare_positions(seq[a], seq[a + 1]) != std::strong_ordering::less) ++bad;
    return bad;
}

struct RandomInstance {
    InputList list;
    OrderSet order;
    std::string describe() const {
        std::string s = "L={";
        for (const auto& t : list) s += t + ",";
        s += "} O={";
        for (const auto& t : order.tokens()) s += t + ",";
        return s + "}";
    }
};

/// Multiset with n in [1, max_n] over at most `max_p` labels; the order is a
/// random arrangement of the labels and may carry one label absent from the
/// list.
inline RandomInstance random_instance(std::mt19937& rng, std::size_t max_n = 8, std::size_t max_p = 4) {
    static const std::vector<Token> labels{"a", "b", "c", "d", "e", "f"};
    const auto n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    const auto p = std::uniform_int_distribution<std::size_t>(1, max_p)(rng);
    std::vector<Token> alphabet(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(p));
    std::shuffle(alphabet.begin(), alphabet.end(), rng);
    const bool spare = p > 1 && std::uniform_int_distribution<int>(0, 3)(rng) == 0;
    const auto used = spare ? p - 1 : p;
    std::vector<Token> items;
    for (std::size_t k = 0; k < n; ++k)
        items.push_back(alphabet[std::uniform_int_distribution<std::size_t>(0, used - 1)(rng)]);
    return {InputList(items), OrderSet(alphabet)};
}

inline InputList letters(std::size_t n) {
    std::vector<Token> items;
    for (std::size_t k = 0; k < n; ++k) items.emplace_back(1, static_cast<char>('a' + k));
    return InputList(items);
}

inline OrderSet letter_order(std::size_t n) {
    std::vector<Token> items;
    for (std::size_t k = 0; k < n; ++k) items.emplace_back(1, static_cast<char>('a' + k));
    return OrderSet(items);
}

} // namespace combigen::testing
