#pragma once

// Shared data model for every count-array generator: tokens, the imposed
// order, the live multiplicity table, emission views and run statistics.
//
// Positions inside an OrderSet are 1-based; position 0 is reserved for
// "not in the order" and doubles as the sentinel predecessor used by the
// combination-style generators.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace combigen {

using Token = std::string;
using Emission = std::vector<Token>;

enum class ErrorKind {
    DuplicateInOrder,
    UncoveredToken,
    ROutOfRange,
    NOutOfRange,
    EqualEmissions,
    LengthMismatch,
    EmptyParts,
    InvalidParts,
    TooLargeForOracle,
    CounterOverflow,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DuplicateInOrder: return "DuplicateInOrder";
    case ErrorKind::UncoveredToken: return "UncoveredToken";
    case ErrorKind::ROutOfRange: return "ROutOfRange";
    case ErrorKind::NOutOfRange: return "NOutOfRange";
    case ErrorKind::EqualEmissions: return "EqualEmissions";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyParts: return "EmptyParts";
    case ErrorKind::InvalidParts: return "InvalidParts";
    case ErrorKind::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorKind::CounterOverflow: return "CounterOverflow";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// The multiset being arranged. Duplicates are allowed; order of items only
/// matters to the derangement generator (forbidden positions).
class InputList {
public:
    InputList() = default;
    InputList(std::initializer_list<Token> items) : items_(items) {}
    explicit InputList(std::vector<Token> items) : items_(std::move(items)) {}

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    const Token& operator[](std::size_t k) const { return items_[k]; }
    std::span<const Token> items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

private:
    std::vector<Token> items_;
};

/// The p distinct tokens in imposed sequence, with a prebuilt lookup table
/// so index_of is O(1) on average.
class OrderSet {
public:
    OrderSet() = default;
    OrderSet(std::initializer_list<Token> tokens) : OrderSet(std::vector<Token>(tokens)) {}

    explicit OrderSet(std::vector<Token> tokens) : sequence_(std::move(tokens)) {
        index_.reserve(sequence_.size());
        for (std::size_t k = 0; k < sequence_.size(); ++k) {
            if (!index_.emplace(sequence_[k], k + 1).second)
                throw Error(ErrorKind::DuplicateInOrder, "token '" + sequence_[k] + "' repeats in order set");
        }
    }

    /// Distinct tokens of `items` in order of first appearance.
    static OrderSet first_occurrence(std::span<const Token> items) {
        std::vector<Token> seq;
        std::unordered_map<Token, bool> seen;
        for (const auto& t : items)
            if (seen.emplace(t, true).second) seq.push_back(t);
        return OrderSet(std::move(seq));
    }

    std::size_t size() const noexcept { return sequence_.size(); }

    /// Token at 1-based position.
    const Token& at(std::size_t position) const { return sequence_.at(position - 1); }

    /// 1-based position of `t`, or 0 when `t` is not in the order.
    std::size_t index_of(const Token& t) const noexcept {
        auto it = index_.find(t);
        return it == index_.end() ? 0 : it->second;
    }

    std::span<const Token> tokens() const noexcept { return sequence_; }

private:
    std::vector<Token> sequence_;
    std::unordered_map<Token, std::size_t> index_;
};

inline std::size_t order_index_of(const OrderSet& order, const Token& t) noexcept {
    return order.index_of(t);
}

/// Live multiplicities parallel to an OrderSet. Slot 0 is a permanently
/// empty sentinel so that generators may probe position 0 without a branch.
class CountArray {
public:
    CountArray() : slots_(1, 0) {}
    explicit CountArray(std::size_t p) : slots_(p + 1, 0) {}
    CountArray(std::initializer_list<std::size_t> counts) : slots_(1, 0) {
        slots_.insert(slots_.end(), counts.begin(), counts.end());
    }

    std::size_t size() const noexcept { return slots_.size() - 1; }

    /// 1-based access; position 0 reads the sentinel.
    std::size_t& operator[](std::size_t position) noexcept { return slots_[position]; }
    std::size_t operator[](std::size_t position) const noexcept { return slots_[position]; }

    std::span<const std::size_t> values() const noexcept {
        return std::span<const std::size_t>(slots_).subspan(1);
    }

    std::size_t total() const noexcept {
        std::size_t sum = 0;
        for (auto c : values()) sum += c;
        return sum;
    }

    friend bool operator==(const CountArray&, const CountArray&) = default;

private:
    std::vector<std::size_t> slots_;
};

inline CountArray build_count_array(const InputList& list, const OrderSet& order) {
    CountArray counts(order.size());
    for (const auto& t : list) {
        const auto position = order.index_of(t);
        if (position == 0)
            throw Error(ErrorKind::UncoveredToken, "token '" + t + "' is missing from the order set");
        ++counts[position];
    }
    return counts;
}

/// Throws on the first violated precondition: uncovered token, or r outside
/// [1, n]. Duplicate order tokens are rejected when the OrderSet is built.
inline void validate_instance(const InputList& list, const OrderSet& order, std::size_t r) {
    for (const auto& t : list)
        if (order.index_of(t) == 0)
            throw Error(ErrorKind::UncoveredToken, "token '" + t + "' is missing from the order set");
    if (r < 1 || r > list.size())
        throw Error(ErrorKind::ROutOfRange,
                    "r=" + std::to_string(r) + " must lie in [1, n=" + std::to_string(list.size()) + "]");
}

/// A generated structure as seen by a sink: order positions plus the order
/// they resolve against. Valid only for the duration of the sink call.
class EmissionView {
public:
    EmissionView(const OrderSet& order, std::span<const std::size_t> positions) noexcept
        : order_(&order), positions_(positions) {}

    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }
    const Token& operator[](std::size_t k) const { return order_->at(positions_[k]); }
    std::span<const std::size_t> positions() const noexcept { return positions_; }
    const OrderSet& order() const noexcept { return *order_; }

    Emission tokens() const {
        Emission e;
        e.reserve(positions_.size());
        for (auto pos : positions_) e.push_back(order_->at(pos));
        return e;
    }

private:
    const OrderSet* order_;
    std::span<const std::size_t> positions_;
};

/// 1-based first index at which two equal-length emissions differ.
template <class Seq>
std::size_t discriminating_index(const Seq& a, const Seq& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::LengthMismatch, "emissions differ in length");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!(a[k] == b[k])) return k + 1;
    throw Error(ErrorKind::EqualEmissions, "emissions are identical");
}

struct GenStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t emissions = 0;
    std::uint64_t wasteful_branches = 0;
    // Iterations of the per-level candidate loop (positions >= 1 only).
    std::uint64_t candidate_iterations = 0;
    bool stopped = false;
};

/// Sinks are callables taking the emission; returning `false` stops the run.
/// Sinks returning void always continue.
template <class S, class View>
concept SinkFor = std::invocable<S&, const View&>;

namespace detail {

inline void bump(std::uint64_t& counter) {
    if (counter == std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorKind::CounterOverflow, "64-bit run counter overflowed");
    ++counter;
}

template <class View, SinkFor<View> Sink>
bool deliver(Sink& sink, const View& view) {
    if constexpr (std::convertible_to<std::invoke_result_t<Sink&, const View&>, bool>) {
        return static_cast<bool>(sink(view));
    } else {
        sink(view);
        return true;
    }
}

} // namespace detail

} // namespace combigen
