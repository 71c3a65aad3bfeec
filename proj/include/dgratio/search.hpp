#pragma once

#include "dgratio/blocks.hpp"
#include "dgratio/distance_set.hpp"
#include "dgratio/rational.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dgratio {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct WorkBudget {
    std::uint64_t max_nodes = kDefaultNodeBudget;
    double max_seconds = 0;  // 0 = no wall-clock cap
};

/// Tracks search-tree nodes against a budget; throws BudgetExceeded when it runs out.
class WorkMeter {
public:
    explicit WorkMeter(WorkBudget budget = {});
    void tick();
    std::uint64_t nodes() const noexcept { return nodes_; }
    double elapsed_seconds() const;

private:
    WorkBudget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

/// interval_alpha[n] = alpha(G(S)[n]) for the n computed so far (entry 0 is 0).
/// prefix_alpha[i] = alpha(n, i) for the circulant currently being solved.
struct AlphaTable {
    std::vector<int> interval_alpha{0};
    std::vector<int> prefix_alpha{0};
    std::int64_t prefix_n = 0;
};

/// alpha(G(S)[n]); the table must hold alpha(1..n-1) and gains entry n.
int alpha_interval(const DistanceSet& s, int n, AlphaTable& table, WorkMeter& meter);

/// Convenience overload that fills the table from scratch with an unlimited budget.
int alpha_interval(const DistanceSet& s, int n);

struct CirculantSolution {
    int alpha = 0;
    std::vector<std::int64_t> members;  // a maximum independent set, vertices in [0, n)
};

/// alpha(G(n, S)) for n > max(S), with a maximum independent set.
CirculantSolution alpha_circulant(const DistanceSet& s, int n, AlphaTable& table, WorkMeter& meter);
int alpha_circulant(const DistanceSet& s, int n);

/// Exhaustive oracle for n <= 26.
int brute_force_alpha_interval(const DistanceSet& s, int n);

enum class RatioStatus { exact, bounded, registry_only };
enum class RatioMethod { stategraph, search, shortcut };

std::string to_string(RatioStatus s);
std::string to_string(RatioMethod m);

struct WorkCounters {
    std::uint64_t nodes = 0;
    int interval_n = 0;   // largest m with alpha(G(S)[m]) known
    int circulant_n = 0;  // largest n with alpha(G(n,S)) known
    std::uint64_t states = 0;
    std::uint64_t arcs = 0;
    double seconds = 0;
};

struct RatioReport {
    explicit RatioReport(DistanceSet s) : set(std::move(s)) {}

    DistanceSet set;
    RatioStatus status = RatioStatus::bounded;
    std::optional<Rational> value;
    Rational lower{0};
    Rational upper{1};
    std::optional<BlockList> lower_witness;
    std::int64_t upper_witness_n = 0;
    RatioMethod method = RatioMethod::search;
    WorkCounters work;
    std::string note;
};

/// Interleaved bound-matching schedule on a normalized, not-all-odd set.
RatioReport compute_ratio(const DistanceSet& s, WorkBudget budget = {});

}  // namespace dgratio
