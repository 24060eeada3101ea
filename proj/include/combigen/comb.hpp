#pragma once

// r-combinations of a multiset.
//
// The naive generator reuses the permutation loop and only admits positions
// that do not precede the previously committed one, so it can descend into
// subtrees that never complete (wasteful branches). The pruned generator
// starts each level at the previous position and stops the level as soon as
// the tokens left at or after the current position cannot fill the remaining
// slots, which removes every wasteful branch.

#include "combigen/core.hpp"
#include "combigen/detail/run_state.hpp"

namespace combigen {

enum class CombMode {
    Multiset, ///< positions non-decreasing; labels may repeat up to their multiplicity
    Distinct, ///< positions strictly increasing; each label at most once
};

/// Prefix sums over the initial counts: cum[1] = 0, cum[i+1] = cum[i] + counts[i].
/// Indexed 1..p+1.
class CumCountArray {
public:
    explicit CumCountArray(std::vector<std::size_t> cum) : cum_(std::move(cum)) {}

    std::size_t operator[](std::size_t i) const noexcept { return cum_[i]; }
    std::size_t p() const noexcept { return cum_.size() - 2; }
    /// Sum of counts at positions x..y inclusive.
    std::size_t range_sum(std::size_t x, std::size_t y) const noexcept { return cum_[y + 1] - cum_[x]; }
    std::span<const std::size_t> values() const noexcept { return std::span<const std::size_t>(cum_).subspan(1); }

private:
    std::vector<std::size_t> cum_;  // slot 0 unused
};

inline CumCountArray build_cumulative_counts(const CountArray& counts) {
    const auto p = counts.size();
    std::vector<std::size_t> cum(p + 2, 0);
    cum[1] = 0;
    for (std::size_t i = 1; i <= p; ++i) cum[i + 1] = cum[i] + counts[i];
    return CumCountArray(std::move(cum));
}

namespace detail {

template <class Sink>
class NaiveCombRunner {
public:
    NaiveCombRunner(const OrderSet& order, CountArray counts, std::size_t r, CombMode mode, Sink& sink)
        : state_(order, std::move(counts), r, sink), r_(r), mode_(mode) {}

    GenStats run() {
        visit(1);
        return state_.stats;
    }

private:
    bool visit(std::size_t index) {
        bump(state_.stats.nodes_visited);
        if (index > r_) return state_.emit();
        const std::size_t prev = index == 1 ? 0 : state_.out.back();
        for (std::size_t i = 1; i <= state_.p(); ++i) {
            ++state_.stats.candidate_iterations;
            const bool ordered = mode_ == CombMode::Multiset ? i >= prev : i > prev;
            if (state_.counts[i] >= 1 && ordered && !state_.branch(i, [&] { return visit(index + 1); }))
                return false;
        }
        return true;
    }

    RunState<Sink> state_;
    std::size_t r_;
    CombMode mode_;
};

template <class Sink>
class PrunedCombRunner {
public:
    PrunedCombRunner(const OrderSet& order, CountArray counts, std::size_t r, CombMode mode, Sink& sink)
        : state_(order, std::move(counts), r, sink),
          cum_(build_cumulative_counts(state_.counts)),
          n_(cum_[state_.p() + 1]),
          r_(r),
          mode_(mode) {
        // Number of nonempty positions at or after i, for the distinct mode.
        const auto p = state_.p();
        nonempty_suffix_.assign(p + 2, 0);
        for (std::size_t i = p; i >= 1; --i)
            nonempty_suffix_[i] = nonempty_suffix_[i + 1] + (state_.counts[i] >= 1 ? 1 : 0);
    }

    GenStats run() {
        visit(1);
        return state_.stats;
    }

private:
    bool visit(std::size_t index) {
        bump(state_.stats.nodes_visited);
        if (index > r_) return state_.emit();
        const std::size_t prev = index == 1 ? 0 : state_.out.back();
        const std::size_t slots_after = r_ - index;
        const auto p = state_.p();
        if (mode_ == CombMode::Multiset) {
            // Positions above i are untouched, so the frozen prefix sums still
            // describe them; position i itself uses its live count.
            for (std::size_t i = prev; i <= p && (n_ - cum_[i + 1] + state_.counts[i]) > slots_after; ++i) {
                if (i == 0) continue;
                ++state_.stats.candidate_iterations;
                if (state_.counts[i] >= 1 && !state_.branch(i, [&] { return visit(index + 1); }))
                    return false;
            }
        } else {
            for (std::size_t i = prev + 1; i <= p && nonempty_suffix_[i] > slots_after; ++i) {
                ++state_.stats.candidate_iterations;
                if (state_.counts[i] >= 1 && !state_.branch(i, [&] { return visit(index + 1); }))
                    return false;
            }
        }
        return true;
    }

    RunState<Sink> state_;
    CumCountArray cum_;
    std::size_t n_;
    std::size_t r_;
    CombMode mode_;
    std::vector<std::size_t> nonempty_suffix_;
};

} // namespace detail

template <SinkFor<EmissionView> Sink>
GenStats generate_combinations(const InputList& list, const OrderSet& order, std::size_t r, CombMode mode,
                               Sink&& sink) {
    validate_instance(list, order, r);
    detail::NaiveCombRunner<std::remove_reference_t<Sink>> runner(order, build_count_array(list, order), r, mode,
                                                                  sink);
    return runner.run();
}

/// Dead-branch-free combinations in multiset mode. Emits exactly the
/// sequence of generate_combinations(..., CombMode::Multiset, ...).
template <SinkFor<EmissionView> Sink>
GenStats generate_combinations_pruned(const InputList& list, const OrderSet& order, std::size_t r, Sink&& sink) {
    validate_instance(list, order, r);
    detail::PrunedCombRunner<std::remove_reference_t<Sink>> runner(order, build_count_array(list, order), r,
                                                                   CombMode::Multiset, sink);
    return runner.run();
}

/// Pruned combinations with an explicit mode. The distinct mode is an
/// extension: it starts each level one past the previous position and bounds
/// the level by the count of nonempty positions remaining.
template <SinkFor<EmissionView> Sink>
GenStats generate_combinations_pruned(const InputList& list, const OrderSet& order, std::size_t r, CombMode mode,
                                      Sink&& sink) {
    validate_instance(list, order, r);
    detail::PrunedCombRunner<std::remove_reference_t<Sink>> runner(order, build_count_array(list, order), r, mode,
                                                                   sink);
    return runner.run();
}

} // namespace combigen
