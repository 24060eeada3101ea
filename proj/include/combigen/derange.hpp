#pragma once

// r-derangements: permutations in which slot k never holds the label that
// sits at position k of the input list. Labels are compared, not occurrence
// identities, so with L = {a, a, b} slot 1 may not hold any `a`.

#include "combigen/core.hpp"
#include "combigen/detail/run_state.hpp"

namespace combigen {

namespace detail {

template <class Sink>
class DerangeRunner {
public:
    DerangeRunner(const InputList& list, const OrderSet& order, CountArray counts, std::size_t r, Sink& sink)
        : state_(order, std::move(counts), r, sink), r_(r) {
        forbidden_.reserve(r);
        for (std::size_t k = 0; k < r; ++k) forbidden_.push_back(order.index_of(list[k]));
    }

    GenStats run() {
        visit(1);
        return state_.stats;
    }

private:
    bool visit(std::size_t index) {
        bump(state_.stats.nodes_visited);
        if (index > r_) return state_.emit();
        const auto banned = forbidden_[index - 1];
        for (std::size_t i = 1; i <= state_.p(); ++i) {
            ++state_.stats.candidate_iterations;
            if (state_.counts[i] >= 1 && i != banned &&
                !state_.branch(i, [&] { return visit(index + 1); }))
                return false;
        }
        return true;
    }

    RunState<Sink> state_;
    std::size_t r_;
    std::vector<std::size_t> forbidden_;
};

} // namespace detail

template <SinkFor<EmissionView> Sink>
GenStats generate_derangements(const InputList& list, const OrderSet& order, std::size_t r, Sink&& sink) {
    validate_instance(list, order, r);
    detail::DerangeRunner<std::remove_reference_t<Sink>> runner(list, order, build_count_array(list, order), r,
                                                                sink);
    return runner.run();
}

} // namespace combigen
