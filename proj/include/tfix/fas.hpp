#pragma once

#include <vector>

#include "tfix/instance.hpp"

namespace tfix {

/// A vertex ordering together with the arcs pointing leftwards in it.
struct OrderedFas {
    std::vector<PlayerId> ordering;  // the order "≺", leftmost first
    std::vector<Arc> back_arcs;      // arcs xy with y before x

    int size() const { return static_cast<int>(back_arcs.size()); }
    /// position[p] = index of p in `ordering`.
    std::vector<int> positions() const;
};

struct FasOptions {
    /// Largest n handled by the exact subset DP.
    int subset_dp_max_n = 20;
    /// Beyond the DP range a bounded search over cycle arcs is used; this caps the FAS size it explores.
    int search_max_size = 8;
};

/// Minimum feedback arc set with the lexicographically smallest optimal ordering.
/// Throws CapExceeded when n is above the DP range and the FAS is larger than search_max_size.
OrderedFas min_fas(const Digraph& graph, const FasOptions& options = {});

/// Leftward arcs of `graph` under `ordering`.
std::vector<Arc> back_arcs_of(const Digraph& graph, const std::vector<PlayerId>& ordering);

}  // namespace tfix
