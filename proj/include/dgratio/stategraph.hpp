#pragma once

#include "dgratio/blocks.hpp"
#include "dgratio/distance_set.hpp"
#include "dgratio/mean_cycle.hpp"
#include "dgratio/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dgratio {

struct ProblemKind {
    enum class Tag { independence, domination, identifying_code, coloring };
    Tag tag = Tag::independence;
    int colors = 0;  // coloring only

    static ProblemKind independence() { return {Tag::independence, 0}; }
    static ProblemKind domination() { return {Tag::domination, 0}; }
    static ProblemKind identifying_code() { return {Tag::identifying_code, 0}; }
    static ProblemKind coloring(int k) { return {Tag::coloring, k}; }

    /// Window length: s, 2s, 6s, or s.
    int window(const DistanceSet& s) const;
    bool is_subset_kind() const { return tag != Tag::coloring; }
};

struct StateGraphLimits {
    int independence_max_s = 24;
    int domination_max_s = 6;
    int identifying_max_window = 12;
    std::uint64_t coloring_max_states = 1u << 20;
    std::uint64_t max_arcs = 60'000'000;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Window-state digraph. A state code is a bitmask over the window (bit i = position i+1)
/// or, for colorings, the base-k digits c_1 + c_2 k + ... with colors 0..k-1.
struct StateGraph {
    ProblemKind kind;
    int window = 0;
    std::vector<std::uint64_t> states;
    Digraph graph;  // weights are |T| for subset kinds, 0 for colorings
};

/// Builds the graph and prunes states lacking a predecessor or successor until stable.
/// Throws ResourceError if the window or the arc count exceeds `limits`.
StateGraph build_state_graph(const DistanceSet& s, ProblemKind kind, const StateGraphLimits& limits = {});

enum class Direction { max, min };

struct CycleWitness {
    std::vector<std::uint64_t> states;
    Rational density;
    std::optional<BlockList> period_set;  // subset kinds (absent if the cycle selects nothing)
    std::vector<int> colors;              // coloring only: one period of the color sequence
    int window = 0;
    std::int64_t period = 0;
};

/// Extremal mean cycle of the state graph, reported as density over the window.
/// Throws std::invalid_argument if the pruned graph is empty.
CycleWitness extremal_mean_cycle(const StateGraph& g, Direction dir,
                                 MeanCycleAlgorithm algo = MeanCycleAlgorithm::automatic);

/// Exact independence ratio computed on S as given (no normalization), with a periodic witness.
std::pair<Rational, BlockList> independence_ratio_exact(const DistanceSet& s, const StateGraphLimits& limits = {});

std::pair<Rational, CycleWitness> min_dominating_density(const DistanceSet& s, const StateGraphLimits& limits = {});

/// r-identifying codes, reduced to 1-identifying codes on the r-th power.
std::pair<Rational, CycleWitness> min_identifying_density(const DistanceSet& s, int r,
                                                          const StateGraphLimits& limits = {});

/// Some periodic proper k-coloring, or nullopt if none exists.
std::optional<CycleWitness> periodic_coloring(const DistanceSet& s, int k, const StateGraphLimits& limits = {});

// Direct property checks on a periodic set given by its positions in [0, period).
bool periodic_dominating(const std::vector<std::int64_t>& positions, std::int64_t period, const DistanceSet& s);
bool periodic_identifying(const std::vector<std::int64_t>& positions, std::int64_t period, const DistanceSet& s);
bool periodic_proper_coloring(const std::vector<int>& colors, const DistanceSet& s);

/// Positions within one period of the set decoded from a subset-kind witness.
std::vector<std::int64_t> witness_positions(const CycleWitness& w);

}  // namespace dgratio
