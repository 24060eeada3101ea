#pragma once

#include "combigen/core.hpp"

namespace combigen::detail {

/// State common to the count-array generators. `out` holds committed order
/// positions for slots 1..index-1.
template <class Sink>
struct RunState {
    const OrderSet& order;
    CountArray counts;
    std::vector<std::size_t> out;
    Sink& sink;
    GenStats stats{};

    RunState(const OrderSet& o, CountArray c, std::size_t capacity, Sink& s)
        : order(o), counts(std::move(c)), sink(s) {
        out.reserve(capacity);
    }

    std::size_t p() const noexcept { return order.size(); }

    bool emit() {
        bump(stats.emissions);
        if (!deliver<EmissionView>(sink, EmissionView(order, out))) {
            stats.stopped = true;
            return false;
        }
        return true;
    }

    /// Commit `position`, descend, restore. Returns false once the sink stops.
    template <class Descend>
    bool branch(std::size_t position, Descend&& descend) {
        out.push_back(position);
        --counts[position];
        const auto before = stats.emissions;
        const bool go = descend();
        ++counts[position];
        out.pop_back();
        if (!go) return false;
        if (stats.emissions == before) ++stats.wasteful_branches;
        return true;
    }
};

} // namespace combigen::detail
