#pragma once

// Brute-force reference enumerators. These never touch the count-array
// generators: each structure is produced by exhaustive enumeration plus a
// filter, deduplicated through a std::set, then sorted with the
// order-following comparator. Work is capped; exceeding the cap throws
// TooLargeForOracle instead of truncating.

#include <algorithm>
#include <bit>
#include <compare>
#include <limits>
#include <optional>
#include <numeric>
#include <set>
#include <string>
#include <variant>

#include "combigen/comb.hpp"
#include "combigen/compose.hpp"
#include "combigen/core.hpp"

namespace combigen::oracle {

/// Largest number of raw candidates any oracle will enumerate.
inline constexpr std::uint64_t work_cap = std::uint64_t{1} << 24;

/// Compare two position sequences: at the discriminating index the smaller
/// position wins; when one is a prefix of the other the shorter is less.
inline std::strong_ordering compare_positions(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    const auto common = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < common; ++k)
        if (a[k] != b[k]) return a[k] <=> b[k];
    return a.size() <=> b.size();
}

inline std::vector<std::size_t> positions_of(const OrderSet& order, const Emission& e) {
    std::vector<std::size_t> pos;
    pos.reserve(e.size());
    for (const auto& t : e) pos.push_back(order.index_of(t));
    return pos;
}

inline std::strong_ordering order_following_compare(const OrderSet& order, const Emission& a, const Emission& b) {
    return compare_positions(positions_of(order, a), positions_of(order, b));
}

inline std::strong_ordering order_following_compare(const PartsSet& parts, std::span<const Part> a,
                                                    std::span<const Part> b) {
    std::vector<std::size_t> pa, pb;
    for (auto v : a) pa.push_back(parts.index_of(v));
    for (auto v : b) pb.push_back(parts.index_of(v));
    return compare_positions(pa, pb);
}

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t v = 1;
    for (std::size_t k = 0; k < exp; ++k) v = saturating_mul(v, base);
    return v;
}

inline std::uint64_t saturating_factorial(std::size_t n) {
    std::uint64_t v = 1;
    for (std::size_t k = 2; k <= n; ++k) v = saturating_mul(v, k);
    return v;
}

inline void require_within_cap(std::uint64_t work, const std::string& what) {
    if (work > work_cap)
        throw Error(ErrorKind::TooLargeForOracle,
                    what + " needs " + std::to_string(work) + " candidates (cap " + std::to_string(work_cap) + ")");
}

inline std::vector<Emission> to_sorted_emissions(const OrderSet& order,
                                                 const std::set<std::vector<std::size_t>>& found) {
    std::vector<std::vector<std::size_t>> seqs(found.begin(), found.end());
    std::sort(seqs.begin(), seqs.end(),
              [](const auto& a, const auto& b) { return compare_positions(a, b) == std::strong_ordering::less; });
    std::vector<Emission> out;
    out.reserve(seqs.size());
    for (const auto& s : seqs) {
        Emission e;
        for (auto pos : s) e.push_back(order.at(pos));
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<std::size_t> list_positions(const InputList& list, const OrderSet& order) {
    std::vector<std::size_t> pos;
    for (const auto& t : list) pos.push_back(order.index_of(t));
    return pos;
}

inline std::vector<std::size_t> multiplicities(const InputList& list, const OrderSet& order) {
    std::vector<std::size_t> mult(order.size() + 1, 0);
    for (const auto& t : list) ++mult[order.index_of(t)];
    return mult;
}

inline void sort_parts(const PartsSet& parts, std::vector<std::vector<Part>>& seqs) {
    std::sort(seqs.begin(), seqs.end(), [&](const auto& a, const auto& b) {
        return order_following_compare(parts, a, b) == std::strong_ordering::less;
    });
}

} // namespace detail

/// All distinct r-length arrangements of list occurrences. Uses either all
/// orderings of the occurrences (n! candidates) or all words over the order
/// filtered by multiplicity (p^r candidates), whichever is smaller.
inline std::vector<Emission> brute_permutations(const InputList& list, const OrderSet& order, std::size_t r) {
    validate_instance(list, order, r);
    const auto n = list.size();
    const auto p = order.size();
    const auto by_orderings = detail::saturating_factorial(n);
    const auto by_words = detail::saturating_pow(p, r);
    detail::require_within_cap(std::min(by_orderings, by_words), "permutation oracle");

    std::set<std::vector<std::size_t>> found;
    if (by_orderings <= by_words) {
        auto pos = detail::list_positions(list, order);
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            std::vector<std::size_t> seq;
            for (std::size_t k = 0; k < r; ++k) seq.push_back(pos[idx[k]]);
            found.insert(std::move(seq));
        } while (std::next_permutation(idx.begin(), idx.end()));
    } else {
        const auto mult = detail::multiplicities(list, order);
        std::vector<std::size_t> word(r, 1);
        while (true) {
            std::vector<std::size_t> used(p + 1, 0);
            bool fits = true;
            for (auto w : word)
                if (++used[w] > mult[w]) fits = false;
            if (fits) found.insert(word);
            std::size_t k = r;
            while (k > 0 && word[k - 1] == p) word[--k] = 1;
            if (k == 0) break;
            ++word[k - 1];
        }
    }
    return detail::to_sorted_emissions(order, found);
}

/// Permutations with e[k] != list[k] for every slot k (labels compared).
inline std::vector<Emission> brute_derangements(const InputList& list, const OrderSet& order, std::size_t r) {
    auto all = brute_permutations(list, order, r);
    std::vector<Emission> out;
    for (auto& e : all) {
        bool avoids = true;
        for (std::size_t k = 0; k < r; ++k)
            if (e[k] == list[k]) avoids = false;
        if (avoids) out.push_back(std::move(e));
    }
    return out;
}

namespace detail {

/// Every sub-multiset of the occurrences, as sorted position sequences,
/// restricted to `length` when given.
inline std::set<std::vector<std::size_t>> sub_multisets(const InputList& list, const OrderSet& order, CombMode mode,
                                                        std::optional<std::size_t> length) {
    const auto n = list.size();
    if (n >= 63) require_within_cap(std::numeric_limits<std::uint64_t>::max(), "subset oracle");
    require_within_cap(std::uint64_t{1} << n, "subset oracle");
    const auto pos = list_positions(list, order);
    std::set<std::vector<std::size_t>> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (length && static_cast<std::size_t>(std::popcount(mask)) != *length) continue;
        std::vector<std::size_t> seq;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::uint64_t{1} << k)) seq.push_back(pos[k]);
        std::sort(seq.begin(), seq.end());
        if (mode == CombMode::Distinct && std::adjacent_find(seq.begin(), seq.end()) != seq.end()) continue;
        found.insert(std::move(seq));
    }
    return found;
}

} // namespace detail

inline std::vector<Emission> brute_combinations(const InputList& list, const OrderSet& order, std::size_t r,
                                                CombMode mode) {
    validate_instance(list, order, r);
    return detail::to_sorted_emissions(order, detail::sub_multisets(list, order, mode, r));
}

inline std::vector<Emission> brute_subsets(const InputList& list, const OrderSet& order, CombMode mode) {
    validate_instance(list, order, list.size());
    return detail::to_sorted_emissions(order, detail::sub_multisets(list, order, mode, std::nullopt));
}

/// All 2^(2n) bracket strings, keeping those whose every prefix has at least
/// as many openers as closers and which end balanced.
inline std::vector<Emission> brute_parenthesizations(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::NOutOfRange, "n must be positive");
    if (2 * n >= 63) detail::require_within_cap(std::numeric_limits<std::uint64_t>::max(), "bracket oracle");
    detail::require_within_cap(std::uint64_t{1} << (2 * n), "bracket oracle");
    std::vector<std::string> strings;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)); ++mask) {
        std::string s;
        long depth = 0;
        bool ok = true;
        for (std::size_t k = 0; k < 2 * n; ++k) {
            const bool closer = mask & (std::uint64_t{1} << (2 * n - 1 - k));
            s.push_back(closer ? ')' : '(');
            depth += closer ? -1 : 1;
            if (depth < 0) ok = false;
        }
        if (ok && depth == 0) strings.push_back(std::move(s));
    }
    std::sort(strings.begin(), strings.end());  // '(' < ')' in ASCII
    std::vector<Emission> out;
    for (const auto& s : strings) {
        Emission e;
        for (char c : s) e.emplace_back(1, c);
        out.push_back(std::move(e));
    }
    return out;
}

/// Compositions of n over `parts`, via all 2^(n-1) ways of cutting n into
/// positive pieces. Bounds are applied only when `apply_bounds` is set.
inline std::vector<std::vector<Part>> brute_compositions(Part n, const PartsSet& parts, bool apply_bounds = false) {
    if (n < 1) throw Error(ErrorKind::NOutOfRange, "n must be positive");
    if (n > 25) detail::require_within_cap(std::numeric_limits<std::uint64_t>::max(), "composition oracle");
    std::vector<std::vector<Part>> out;
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
        std::vector<Part> seq;
        Part run = 1;
        for (Part k = 0; k + 1 < n; ++k) {
            if (cuts & (std::uint64_t{1} << k)) {
                seq.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        seq.push_back(run);
        bool ok = true;
        std::vector<std::size_t> used(parts.size() + 1, 0);
        for (auto v : seq) {
            const auto pos = parts.index_of(v);
            if (pos == 0) {
                ok = false;
                break;
            }
            ++used[pos];
        }
        if (ok && apply_bounds && parts.has_bounds())
            for (std::size_t i = 1; i <= parts.size(); ++i)
                if (used[i] > (*parts.bounds())[i - 1]) ok = false;
        if (ok) out.push_back(std::move(seq));
    }
    detail::sort_parts(parts, out);
    return out;
}

/// One representative per multiset of parts, written with non-decreasing
/// positions in the parts order. Bounds apply when present.
inline std::vector<std::vector<Part>> brute_partitions(Part n, const PartsSet& parts) {
    std::set<std::vector<std::size_t>> canonical;
    for (const auto& c : brute_compositions(n, parts, true)) {
        std::vector<std::size_t> pos;
        for (auto v : c) pos.push_back(parts.index_of(v));
        std::sort(pos.begin(), pos.end());
        canonical.insert(std::move(pos));
    }
    std::vector<std::vector<Part>> out;
    for (const auto& pos : canonical) {
        std::vector<Part> seq;
        for (auto i : pos) seq.push_back(parts.at(i));
        out.push_back(std::move(seq));
    }
    detail::sort_parts(parts, out);
    return out;
}

/// Catalan numbers by the convolution recurrence C(k+1) = sum C(i) C(k-i).
inline std::uint64_t catalan_number(std::size_t n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
    return c[n];
}

enum class StructureKind { Permutation, Combination, Subset, Derangement, Parenthesization, Composition, Partition };

struct TokenQuery {
    InputList list;
    OrderSet order;
    std::size_t r = 0;  // ignored for subsets
    CombMode mode = CombMode::Multiset;
};

struct ParenQuery {
    std::size_t pairs = 0;
};

struct PartsQuery {
    Part target = 0;
    PartsSet parts;
    bool apply_bounds = false;
};

using Query = std::variant<TokenQuery, ParenQuery, PartsQuery>;

/// Uniform entry point. Composition parts come back as decimal tokens.
inline std::vector<Emission> brute_structures(StructureKind kind, const Query& query) {
    auto parts_as_tokens = [](const std::vector<std::vector<Part>>& seqs) {
        std::vector<Emission> out;
        for (const auto& s : seqs) {
            Emission e;
            for (auto v : s) e.push_back(std::to_string(v));
            out.push_back(std::move(e));
        }
        return out;
    };
    switch (kind) {
    case StructureKind::Permutation: {
        const auto& q = std::get<TokenQuery>(query);
        return brute_permutations(q.list, q.order, q.r);
    }
    case StructureKind::Combination: {
        const auto& q = std::get<TokenQuery>(query);
        return brute_combinations(q.list, q.order, q.r, q.mode);
    }
    case StructureKind::Subset: {
        const auto& q = std::get<TokenQuery>(query);
        return brute_subsets(q.list, q.order, q.mode);
    }
    case StructureKind::Derangement: {
        const auto& q = std::get<TokenQuery>(query);
        return brute_derangements(q.list, q.order, q.r);
    }
    case StructureKind::Parenthesization:
        return brute_parenthesizations(std::get<ParenQuery>(query).pairs);
    case StructureKind::Composition: {
        const auto& q = std::get<PartsQuery>(query);
        return parts_as_tokens(brute_compositions(q.target, q.parts, q.apply_bounds));
    }
    case StructureKind::Partition: {
        const auto& q = std::get<PartsQuery>(query);
        return parts_as_tokens(brute_partitions(q.target, q.parts));
    }
    }
    return {};
}

} // namespace combigen::oracle
