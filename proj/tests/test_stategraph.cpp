#include <doctest.h>

#include "dgratio/errors.hpp"
#include "dgratio/mean_cycle.hpp"
#include "dgratio/stategraph.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace dgratio;

namespace {

Digraph make_graph(std::vector<std::int64_t> w, const std::vector<std::pair<int, int>>& arcs) {
    Digraph g;
    g.weight = std::move(w);
    g.offsets.assign(g.weight.size() + 1, 0);
    std::vector<std::vector<std::uint32_t>> adj(g.weight.size());
    for (auto [u, v] : arcs) adj[static_cast<std::size_t>(u)].push_back(static_cast<std::uint32_t>(v));
    g.offsets.assign(1, 0);
    for (auto& a : adj) {
        g.targets.insert(g.targets.end(), a.begin(), a.end());
        g.offsets.push_back(g.targets.size());
    }
    return g;
}

// Max mean over all simple cycles, by enumerating cycles from their smallest vertex.
Rational brute_max_mean(const Digraph& g) {
    std::optional<Rational> best;
    const auto n = static_cast<std::uint32_t>(g.vertices());
    std::vector<std::uint8_t> on(n, 0);
    std::function<void(std::uint32_t, std::uint32_t, std::int64_t, std::int64_t)> dfs =
        [&](std::uint32_t root, std::uint32_t v, std::int64_t sum, std::int64_t len) {
            for (auto u : g.successors(v)) {
                if (u == root) {
                    Rational m(sum, len);
                    if (!best || m > *best) best = m;
                } else if (u > root && !on[u]) {
                    on[u] = 1;
                    dfs(root, u, sum + g.weight[u], len + 1);
                    on[u] = 0;
                }
            }
        };
    for (std::uint32_t r = 0; r < n; ++r) {
        on[r] = 1;
        dfs(r, r, g.weight[r], 1);
        on[r] = 0;
    }
    REQUIRE(best.has_value());
    return *best;
}

std::set<std::pair<std::uint64_t, std::uint64_t>> arc_set(const StateGraph& g) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::size_t u = 0; u < g.states.size(); ++u)
        for (auto v : g.graph.successors(u)) out.insert({g.states[u], g.states[v]});
    return out;
}

}  // namespace

TEST_CASE("independence state graph for {1}") {
    auto g = build_state_graph(DistanceSet{1}, ProblemKind::independence());
    CHECK(g.window == 1);
    CHECK(g.states == std::vector<std::uint64_t>{0, 1});
    std::set<std::pair<std::uint64_t, std::uint64_t>> expect{{0, 0}, {0, 1}, {1, 0}};
    CHECK(arc_set(g) == expect);
}

TEST_CASE("independence state graph for {1,2}") {
    auto g = build_state_graph(DistanceSet{1, 2}, ProblemKind::independence());
    CHECK(g.states == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("independence arcs match the union predicate") {
    for (auto s : {DistanceSet{1, 3}, DistanceSet{2, 5}, DistanceSet{1, 4, 6}}) {
        auto g = build_state_graph(s, ProblemKind::independence());
        const int l = g.window;
        auto indep = [&](std::uint64_t y) {
            for (auto d : s)
                if (y & (y >> d)) return false;
            return true;
        };
        std::set<std::pair<std::uint64_t, std::uint64_t>> expect;
        std::set<std::uint64_t> kept(g.states.begin(), g.states.end());
        for (auto a : kept)
            for (auto b : kept)
                if (indep(a | (b << l))) expect.insert({a, b});
        CHECK(arc_set(g) == expect);
    }
}

TEST_CASE("domination state graph for {1} keeps all states") {
    auto g = build_state_graph(DistanceSet{1}, ProblemKind::domination());
    CHECK(g.window == 2);
    CHECK(g.states.size() == 4);
    // Arc T->T' iff positions 2,3 of T ∪ (T'+2) are dominated.
    for (std::size_t u = 0; u < 4; ++u)
        for (std::uint64_t t2 = 0; t2 < 4; ++t2) {
            std::uint64_t y = g.states[u] | (t2 << 2);
            bool p2 = (y & 0b0111) != 0;
            bool p3 = (y & 0b1110) != 0;
            auto succ = g.graph.successors(u);
            bool has = std::any_of(succ.begin(), succ.end(), [&](auto v) { return g.states[v] == t2; });
            CHECK(has == (p2 && p3));
        }
}

TEST_CASE("mean cycle small examples") {
    auto loop = make_graph({1}, {{0, 0}});
    CHECK(Rational(max_mean_cycle(loop).weight_sum, 2 * 1) == Rational(1, 2));
    auto two = make_graph({0, 1}, {{0, 1}, {1, 0}});
    CHECK(max_mean_cycle(two).mean() == Rational(1, 2));
    CHECK(max_mean_cycle(two, MeanCycleAlgorithm::howard).mean() == Rational(1, 2));
    auto g = build_state_graph(DistanceSet{1}, ProblemKind::independence());
    CHECK(extremal_mean_cycle(g, Direction::max).density == Rational(1, 2));
    CHECK_THROWS(max_mean_cycle(make_graph({1, 2}, {{0, 1}})));
}

TEST_CASE("karp and howard agree with cycle enumeration") {
    std::mt19937 rng(3);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::int64_t> w;
        for (int i = 0; i < n; ++i) w.push_back(static_cast<std::int64_t>(rng() % 11) - 5);
        std::vector<std::pair<int, int>> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng() % 3 == 0) arcs.push_back({u, v});
        arcs.push_back({n - 1, 0});
        for (int u = 0; u + 1 < n; ++u) arcs.push_back({u, u + 1});
        // Dead ends exercise the trimming path.
        w.push_back(100);
        arcs.push_back({0, n});
        auto g = make_graph(w, arcs);
        Rational expect = brute_max_mean(g);
        auto k = max_mean_cycle(g, MeanCycleAlgorithm::karp);
        auto h = max_mean_cycle(g, MeanCycleAlgorithm::howard);
        CHECK(k.mean() == expect);
        CHECK(h.mean() == expect);
        // Cycles are genuine and simple.
        for (const auto* c : {&k, &h}) {
            std::set<std::uint32_t> uniq(c->cycle.begin(), c->cycle.end());
            CHECK(uniq.size() == c->cycle.size());
            for (std::size_t i = 0; i < c->cycle.size(); ++i) {
                auto succ = g.successors(c->cycle[i]);
                auto nx = c->cycle[(i + 1) % c->cycle.size()];
                CHECK(std::find(succ.begin(), succ.end(), nx) != succ.end());
            }
        }
        // Negation duality.
        Digraph neg = g;
        for (auto& x : neg.weight) x = -x;
        CHECK(min_mean_cycle(g).mean() == -max_mean_cycle(neg).mean());
    }
}

TEST_CASE("karp and howard agree on state graphs") {
    for (auto s : {DistanceSet{1, 4}, DistanceSet{1, 4, 7}, DistanceSet{2, 3, 7}, DistanceSet{1, 6, 8}}) {
        auto g = build_state_graph(s, ProblemKind::independence());
        CHECK(extremal_mean_cycle(g, Direction::max, MeanCycleAlgorithm::karp).density ==
              extremal_mean_cycle(g, Direction::max, MeanCycleAlgorithm::howard).density);
    }
}

TEST_CASE("exact independence ratio") {
    auto [a, w] = independence_ratio_exact(DistanceSet{1, 4});
    CHECK(a == Rational(2, 5));
    CHECK_FALSE(verify_periodic_independent(w, DistanceSet{1, 4}));
    CHECK(block_density(w) == a);
    CHECK(independence_ratio_exact(DistanceSet{1, 4, 7}).first == Rational(3, 8));
    CHECK(independence_ratio_exact(DistanceSet{2, 6}).first == Rational(1, 2));
    CHECK(independence_ratio_exact(DistanceSet{1, 2, 3}).first == Rational(1, 4));
    StateGraphLimits tight;
    tight.independence_max_s = 5;
    CHECK_THROWS_AS(independence_ratio_exact(DistanceSet{1, 6}, tight), ResourceError);
    tight.independence_max_s = 20;
    tight.max_arcs = 10;
    CHECK_THROWS_AS(independence_ratio_exact(DistanceSet{1, 6}, tight), ResourceError);
}

TEST_CASE("witness period bound") {
    for (auto s : {DistanceSet{1, 4, 7}, DistanceSet{1, 3, 8}, DistanceSet{2, 5, 9}}) {
        auto g = build_state_graph(s, ProblemKind::independence());
        auto w = extremal_mean_cycle(g, Direction::max);
        CHECK(w.period <= static_cast<std::int64_t>(g.window) * static_cast<std::int64_t>(g.states.size()));
        CHECK(w.period <= static_cast<std::int64_t>(g.window) << g.window);
    }
}

TEST_CASE("minimum dominating density") {
    CHECK(min_dominating_density(DistanceSet{1}).first == Rational(1, 3));
    CHECK(min_dominating_density(DistanceSet{1, 2}).first == Rational(1, 5));
    auto two = min_dominating_density(DistanceSet{2}).first;
    auto oracle_two = oracle::min_periodic_density(
        12, [](std::uint32_t m, int p) { return oracle::dominating(DistanceSet{2}, m, p); });
    REQUIRE(oracle_two.has_value());
    CHECK(two == *oracle_two);
    CHECK(two == Rational(1, 3));
    for (auto s : {DistanceSet{1, 3}, DistanceSet{2, 3}}) {
        auto [d, w] = min_dominating_density(s);
        CHECK(periodic_dominating(witness_positions(w), w.period, s));
        auto o = oracle::min_periodic_density(14, [&](std::uint32_t m, int p) { return oracle::dominating(s, m, p); });
        REQUIRE(o.has_value());
        CHECK(d <= *o);
    }
}

TEST_CASE("minimum identifying code density") {
    auto o = oracle::min_periodic_density(
        12, [](std::uint32_t m, int p) { return oracle::identifying(DistanceSet{1}, m, p); });
    REQUIRE(o.has_value());
    auto [d1, w1] = min_identifying_density(DistanceSet{1}, 1);
    CHECK(d1 == *o);
    CHECK(periodic_identifying(witness_positions(w1), w1.period, DistanceSet{1}));
    CHECK(min_identifying_density(DistanceSet{1}, 2).first == min_identifying_density(DistanceSet{1, 2}, 1).first);
    auto o2 = oracle::min_periodic_density(
        12, [](std::uint32_t m, int p) { return oracle::identifying(DistanceSet{2}, m, p); });
    REQUIRE(o2.has_value());
    CHECK(min_identifying_density(DistanceSet{2}, 1, StateGraphLimits{.identifying_max_window = 12}).first == *o2);
    CHECK(*o2 == *o);
    CHECK_THROWS_AS(min_identifying_density(DistanceSet{1, 3}, 1), ResourceError);
}

TEST_CASE("periodic colorings") {
    auto two = periodic_coloring(DistanceSet{1}, 2);
    REQUIRE(two.has_value());
    CHECK(two->period == 2);
    CHECK(periodic_proper_coloring(two->colors, DistanceSet{1}));
    CHECK_FALSE(periodic_coloring(DistanceSet{1}, 1).has_value());
    auto four = periodic_coloring(DistanceSet{1, 2, 3}, 4);
    REQUIRE(four.has_value());
    CHECK(periodic_proper_coloring(four->colors, DistanceSet{1, 2, 3}));
    CHECK_FALSE(periodic_coloring(DistanceSet{1, 2, 3}, 3).has_value());
    CHECK(periodic_coloring(DistanceSet{1, 4}, 3).has_value());
}
