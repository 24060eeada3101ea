#pragma once

// Balanced bracket sequences of n pairs (parenthesizations of n + 1
// factors), generated as permutations of n "(" and n ")" where a closer is
// admitted only while more closers than openers remain.

#include "combigen/core.hpp"
#include "combigen/detail/run_state.hpp"

namespace combigen {

/// Largest pair count whose Catalan number fits the 64-bit emission counter.
inline constexpr std::size_t max_paren_pairs = 33;

inline const OrderSet& paren_order() {
    static const OrderSet order{"(", ")"};
    return order;
}

namespace detail {

template <class Sink>
class ParenRunner {
public:
    ParenRunner(std::size_t n, Sink& sink) : state_(paren_order(), CountArray{n, n}, 2 * n, sink), length_(2 * n) {}

    GenStats run() {
        visit(1);
        return state_.stats;
    }

private:
    bool visit(std::size_t index) {
        bump(state_.stats.nodes_visited);
        if (index > length_) return state_.emit();
        auto& counts = state_.counts;
        for (std::size_t i = 1; i <= 2; ++i) {
            ++state_.stats.candidate_iterations;
            if ((i != 2 || counts[2] > counts[1]) && counts[i] >= 1 &&
                !state_.branch(i, [&] { return visit(index + 1); }))
                return false;
        }
        return true;
    }

    RunState<Sink> state_;
    std::size_t length_;
};

} // namespace detail

template <SinkFor<EmissionView> Sink>
GenStats generate_parenthesizations(std::size_t n, Sink&& sink) {
    if (n < 1 || n > max_paren_pairs)
        throw Error(ErrorKind::NOutOfRange,
                    "n=" + std::to_string(n) + " must lie in [1, " + std::to_string(max_paren_pairs) + "]");
    detail::ParenRunner<std::remove_reference_t<Sink>> runner(n, sink);
    return runner.run();
}

} // namespace combigen
