#pragma once

// Integer compositions of n over an allowed parts sequence, optionally with
// per-part use bounds, and the partition variant that keeps only the
// representative whose part positions never decrease.
//
// The parts sequence doubles as the imposed order: with parts {3, 2} every
// composition starting with 3 precedes those starting with 2.

#include <algorithm>
#include <optional>

#include "combigen/core.hpp"

namespace combigen {

using Part = std::uint64_t;

/// Recursion depth is bounded by n, so n is capped to keep the stack small.
inline constexpr Part max_composition_target = 10000;

class PartsSet {
public:
    PartsSet(std::initializer_list<Part> parts) : PartsSet(std::vector<Part>(parts)) {}

    explicit PartsSet(std::vector<Part> parts, std::optional<std::vector<std::size_t>> bounds = std::nullopt)
        : parts_(std::move(parts)), bounds_(std::move(bounds)) {
        if (parts_.empty()) throw Error(ErrorKind::EmptyParts, "parts set is empty");
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] == 0) throw Error(ErrorKind::InvalidParts, "parts must be positive");
            if (std::find(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(k), parts_[k]) !=
                parts_.begin() + static_cast<std::ptrdiff_t>(k))
                throw Error(ErrorKind::InvalidParts, "part " + std::to_string(parts_[k]) + " repeats");
        }
        if (bounds_ && bounds_->size() != parts_.size())
            throw Error(ErrorKind::InvalidParts, "bounds must be parallel to parts");
    }

    static PartsSet bounded(std::vector<Part> parts, std::vector<std::size_t> bounds) {
        return PartsSet(std::move(parts), std::move(bounds));
    }

    std::size_t size() const noexcept { return parts_.size(); }
    /// Part at 1-based position.
    Part at(std::size_t position) const { return parts_.at(position - 1); }
    std::span<const Part> parts() const noexcept { return parts_; }
    bool has_bounds() const noexcept { return bounds_.has_value(); }
    const std::optional<std::vector<std::size_t>>& bounds() const noexcept { return bounds_; }

    /// 1-based position of `value`, or 0 when it is not a part.
    std::size_t index_of(Part value) const noexcept {
        auto it = std::find(parts_.begin(), parts_.end(), value);
        return it == parts_.end() ? 0 : static_cast<std::size_t>(it - parts_.begin()) + 1;
    }

private:
    std::vector<Part> parts_;
    std::optional<std::vector<std::size_t>> bounds_;
};

struct CompositionOptions {
    /// Accept n = 0 and emit the single empty composition.
    bool allow_zero = false;
};

namespace detail {

enum class CompositionShape { Ordered, Partition };

template <class Sink>
class CompositionRunner {
public:
    CompositionRunner(Part n, const PartsSet& parts, bool bounded, CompositionShape shape, Sink& sink)
        : parts_(parts), remaining_(n), bounded_(bounded), shape_(shape), sink_(sink) {
        if (bounded_) {
            uses_left_.assign(parts.size() + 1, 0);
            for (std::size_t i = 1; i <= parts.size(); ++i) uses_left_[i] = (*parts.bounds())[i - 1];
        }
    }

    GenStats run() {
        visit();
        return stats_;
    }

private:
    bool visit() {
        bump(stats_.nodes_visited);
        if (remaining_ == 0) {
            bump(stats_.emissions);
            if (!deliver<std::span<const Part>>(sink_, std::span<const Part>(out_))) {
                stats_.stopped = true;
                return false;
            }
            return true;
        }
        const std::size_t first = shape_ == CompositionShape::Partition && !positions_.empty() ? positions_.back() : 1;
        for (std::size_t i = first; i <= parts_.size(); ++i) {
            ++stats_.candidate_iterations;
            const Part part = parts_.at(i);
            if (remaining_ < part || (bounded_ && uses_left_[i] == 0)) continue;
            out_.push_back(part);
            positions_.push_back(i);
            remaining_ -= part;
            if (bounded_) --uses_left_[i];
            const auto before = stats_.emissions;
            const bool go = visit();
            if (bounded_) ++uses_left_[i];
            remaining_ += part;
            positions_.pop_back();
            out_.pop_back();
            if (!go) return false;
            if (stats_.emissions == before) ++stats_.wasteful_branches;
        }
        return true;
    }

    const PartsSet& parts_;
    Part remaining_;
    bool bounded_;
    CompositionShape shape_;
    Sink& sink_;
    std::vector<Part> out_;
    std::vector<std::size_t> positions_;
    std::vector<std::size_t> uses_left_;
    GenStats stats_{};
};

inline void check_target(Part n, const CompositionOptions& options) {
    if ((n == 0 && !options.allow_zero) || n > max_composition_target)
        throw Error(ErrorKind::NOutOfRange, "n=" + std::to_string(n) + " must lie in [1, " +
                                                std::to_string(max_composition_target) + "]");
}

} // namespace detail

/// Every sequence of parts summing to n. Bounds on `parts`, if any, are ignored.
template <SinkFor<std::span<const Part>> Sink>
GenStats generate_compositions(Part n, const PartsSet& parts, Sink&& sink, CompositionOptions options = {}) {
    detail::check_target(n, options);
    detail::CompositionRunner<std::remove_reference_t<Sink>> runner(n, parts, false,
                                                                    detail::CompositionShape::Ordered, sink);
    return runner.run();
}

/// Compositions in which part i is used at most bounds[i] times.
template <SinkFor<std::span<const Part>> Sink>
GenStats generate_compositions_bounded(Part n, const PartsSet& parts, Sink&& sink, CompositionOptions options = {}) {
    detail::check_target(n, options);
    if (!parts.has_bounds()) throw Error(ErrorKind::InvalidParts, "bounded compositions need per-part bounds");
    detail::CompositionRunner<std::remove_reference_t<Sink>> runner(n, parts, true,
                                                                    detail::CompositionShape::Ordered, sink);
    return runner.run();
}

/// One representative per multiset of parts summing to n: the one whose
/// positions in the parts order are non-decreasing. Bounds apply if present.
template <SinkFor<std::span<const Part>> Sink>
GenStats generate_partitions(Part n, const PartsSet& parts, Sink&& sink, CompositionOptions options = {}) {
    detail::check_target(n, options);
    detail::CompositionRunner<std::remove_reference_t<Sink>> runner(n, parts, parts.has_bounds(),
                                                                    detail::CompositionShape::Partition, sink);
    return runner.run();
}

} // namespace combigen
