#pragma once

// All subsets in one traversal: the committed prefix is emitted on every
// entry into the routine (the empty subset first), then extended under the
// combination ordering rule with r fixed to n.

#include "combigen/comb.hpp"

namespace combigen {

namespace detail {

template <class Sink>
class SubsetRunner {
public:
    SubsetRunner(const OrderSet& order, CountArray counts, std::size_t n, CombMode mode, Sink& sink)
        : state_(order, std::move(counts), n, sink), n_(n), mode_(mode) {}

    GenStats run() {
        visit(1);
        return state_.stats;
    }

private:
    bool visit(std::size_t index) {
        bump(state_.stats.nodes_visited);
        if (!state_.emit()) return false;
        if (index > n_) return true;
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
    std::size_t n_;
    CombMode mode_;
};

} // namespace detail

template <SinkFor<EmissionView> Sink>
GenStats generate_subsets(const InputList& list, const OrderSet& order, CombMode mode, Sink&& sink) {
    validate_instance(list, order, list.size());
    detail::SubsetRunner<std::remove_reference_t<Sink>> runner(order, build_count_array(list, order), list.size(),
                                                               mode, sink);
    return runner.run();
}

} // namespace combigen
