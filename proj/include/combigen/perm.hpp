#pragma once

// Unique r-permutations of a multiset, streamed in the order imposed by an
// OrderSet. Each level tries order positions 1..p and commits any position
// whose live count is nonzero, decrementing before descent and restoring
// after. Recursion depth is r + 1.

#include "combigen/core.hpp"
#include "combigen/detail/run_state.hpp"

namespace combigen {

namespace detail {

template <class Sink>
class PermRunner {
public:
    PermRunner(const OrderSet& order, CountArray counts, std::size_t r, Sink& sink)
        : state_(order, std::move(counts), r, sink), r_(r) {}

    GenStats run() {
        visit(1);
        return state_.stats;
    }

private:
    bool visit(std::size_t index) {
        bump(state_.stats.nodes_visited);
        if (index > r_) return state_.emit();
        for (std::size_t i = 1; i <= state_.p(); ++i) {
            ++state_.stats.candidate_iterations;
            if (state_.counts[i] >= 1 && !state_.branch(i, [&] { return visit(index + 1); }))
                return false;
        }
        return true;
    }

    RunState<Sink> state_;
    std::size_t r_;
};

} // namespace detail

template <SinkFor<EmissionView> Sink>
GenStats generate_permutations(const InputList& list, const OrderSet& order, std::size_t r, Sink&& sink) {
    validate_instance(list, order, r);
    detail::PermRunner<std::remove_reference_t<Sink>> runner(order, build_count_array(list, order), r, sink);
    return runner.run();
}

} // namespace combigen
