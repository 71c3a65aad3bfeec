#pragma once

#include "dgratio/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dgratio {

/// Vertex-weighted digraph in compressed adjacency form. An arc u->v carries the weight of u.
struct Digraph {
    std::vector<std::int64_t> weight;
    std::vector<std::uint64_t> offsets{0};  // size = vertices + 1
    std::vector<std::uint32_t> targets;

    std::size_t vertices() const noexcept { return weight.size(); }
    std::size_t arcs() const noexcept { return targets.size(); }
    std::span<const std::uint32_t> successors(std::size_t v) const {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
};

struct MeanCycle {
    std::vector<std::uint32_t> cycle;  // simple cycle, cycle[i] -> cycle[i+1] -> ... -> cycle[0]
    std::int64_t weight_sum = 0;
    Rational mean() const { return Rational(weight_sum, static_cast<std::int64_t>(cycle.size())); }
};

enum class MeanCycleAlgorithm { automatic, karp, howard };

/// Maximum mean cycle. Throws std::invalid_argument on an acyclic graph.
MeanCycle max_mean_cycle(const Digraph& g, MeanCycleAlgorithm algo = MeanCycleAlgorithm::automatic);

/// Minimum mean cycle, via negated weights.
MeanCycle min_mean_cycle(const Digraph& g, MeanCycleAlgorithm algo = MeanCycleAlgorithm::automatic);

}  // namespace dgratio
