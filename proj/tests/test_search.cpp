#include <doctest.h>

#include "dgratio/errors.hpp"
#include "dgratio/ratio.hpp"
#include "dgratio/search.hpp"
#include "oracles.hpp"

#include <random>

using namespace dgratio;

namespace {

DistanceSet random_set(std::mt19937& rng, int max_elem, std::size_t max_size) {
    std::vector<std::int64_t> v;
    std::size_t size = 1 + rng() % max_size;
    while (v.size() < size) {
        std::int64_t x = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(max_elem));
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    return DistanceSet(v);
}

}  // namespace

TEST_CASE("interval alpha examples agree with the oracle") {
    CHECK(oracle::alpha_interval(DistanceSet{1, 2}, 7) == 3);
    CHECK(oracle::alpha_interval(DistanceSet{1, 2, 3}, 9) == 3);
    CHECK(oracle::alpha_interval(DistanceSet{1, 4, 7}, 8) == 3);
    CHECK(alpha_interval(DistanceSet{1, 2}, 7) == 3);
    CHECK(alpha_interval(DistanceSet{1, 2, 3}, 9) == 3);
    CHECK(alpha_interval(DistanceSet{1, 4, 7}, 8) == 3);
}

TEST_CASE("circulant alpha examples agree with the oracle") {
    CHECK(oracle::alpha_circulant(DistanceSet{1, 4}, 5) == 2);
    CHECK(oracle::alpha_circulant(DistanceSet{1, 2}, 6) == 2);
    // 6/15 would exceed the independence ratio 3/8, so 5 is also forced by the bound.
    CHECK(oracle::alpha_circulant(DistanceSet{1, 4, 7}, 15) == 5);
    CHECK(alpha_circulant(DistanceSet{1, 4}, 5) == 2);
    CHECK(alpha_circulant(DistanceSet{1, 2}, 6) == 2);
    CHECK(alpha_circulant(DistanceSet{1, 4, 7}, 15) == 5);
    CHECK_THROWS(alpha_circulant(DistanceSet{1, 4}, 4));
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_alpha_interval(DistanceSet{1}, 5) == 3);
    CHECK(brute_force_alpha_interval(DistanceSet{1, 2}, 4) == 2);
    CHECK(oracle::alpha_interval(DistanceSet{2, 3}, 10) == 4);
    CHECK(brute_force_alpha_interval(DistanceSet{2, 3}, 10) == 4);
    CHECK_THROWS(brute_force_alpha_interval(DistanceSet{1}, 27));
}

TEST_CASE("branch and bound equals brute force, tables are monotone") {
    std::mt19937 rng(17);
    for (int t = 0; t < 60; ++t) {
        auto s = random_set(rng, 8, 4);
        AlphaTable table;
        WorkMeter meter;
        for (int n = 1; n <= 20; ++n) {
            int a = alpha_interval(s, n, table, meter);
            if (n % 4 == 0 || n == 20) CHECK(a == brute_force_alpha_interval(s, n));
        }
        CHECK(table.interval_alpha[1] == 1);
        for (std::size_t n = 1; n + 1 < table.interval_alpha.size(); ++n) {
            int step = table.interval_alpha[n + 1] - table.interval_alpha[n];
            CHECK((step == 0 || step == 1));
        }
        int n = static_cast<int>(s.max_element()) + 1 + static_cast<int>(rng() % 8);
        CHECK(alpha_circulant(s, n) == oracle::alpha_circulant(s, n));
    }
}

TEST_CASE("circulant solution is a maximum independent set of G(n,S)") {
    AlphaTable table;
    WorkMeter meter;
    auto sol = alpha_circulant(DistanceSet{1, 4, 7}, 15, table, meter);
    CHECK(sol.alpha == 5);
    CHECK(sol.members.size() == 5);
    CHECK(table.prefix_n == 15);
    CHECK(table.prefix_alpha.size() == 16);
    auto bl = blocks_from_positions(sol.members, 15);
    CHECK_FALSE(verify_periodic_independent(bl, DistanceSet{1, 4, 7}));
}

TEST_CASE("compute_ratio examples") {
    auto a = compute_ratio(DistanceSet{1, 2, 3});
    CHECK(a.status == RatioStatus::exact);
    CHECK(a.value == Rational(1, 4));
    CHECK(compute_ratio(DistanceSet{1, 4, 7}).value == Rational(3, 8));
    CHECK(compute_ratio(DistanceSet{1, 2, 5}).value == Rational(1, 3));
}

TEST_CASE("compute_ratio reports bounds when the budget runs out") {
    auto r = compute_ratio(DistanceSet{1, 20, 21}, WorkBudget{20000, 0});
    CHECK(r.status == RatioStatus::bounded);
    CHECK_FALSE(r.value.has_value());
    CHECK(r.lower <= r.upper);
    CHECK(r.lower < r.upper);
    CHECK(r.work.nodes > 20000);
    REQUIRE(r.lower_witness.has_value());
    CHECK_FALSE(verify_periodic_independent(*r.lower_witness, r.set));
    CHECK(block_density(*r.lower_witness) == r.lower);
}

TEST_CASE("sandwich, witness and agreement with the state graph") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        auto s = random_set(rng, 9, 3);
        auto norm = normalize(s);
        if (norm.all_odd) continue;
        auto r = compute_ratio(norm.reduced);
        CHECK(r.lower <= r.upper);
        REQUIRE(r.status == RatioStatus::exact);
        REQUIRE(r.lower_witness.has_value());
        CHECK_FALSE(verify_periodic_independent(*r.lower_witness, norm.reduced));
        CHECK(block_density(*r.lower_witness) == r.lower);
        CHECK(r.value == independence_ratio_exact(norm.reduced).first);
        CHECK(r.upper == Rational(alpha_interval(norm.reduced, static_cast<int>(r.upper_witness_n)), r.upper_witness_n));
    }
}

TEST_CASE("compute dispatcher") {
    auto odd = compute(DistanceSet{3, 5, 7});
    CHECK(odd.method == RatioMethod::shortcut);
    CHECK(odd.value == Rational(1, 2));
    auto forced = compute(DistanceSet{1, 3, 5}, ComputeOptions{MethodChoice::search, {}, {}});
    CHECK(forced.method == RatioMethod::shortcut);
    CHECK(forced.note.find("search skipped") != std::string::npos);
    auto scaled = compute(DistanceSet{2, 8, 14});
    CHECK(scaled.value == Rational(3, 8));
    REQUIRE(scaled.lower_witness.has_value());
    CHECK_FALSE(verify_periodic_independent(*scaled.lower_witness, DistanceSet{2, 8, 14}));
    CHECK(block_density(*scaled.lower_witness) == Rational(3, 8));
    auto even_scale = compute(DistanceSet{2, 6});
    CHECK(even_scale.value == Rational(1, 2));
    CHECK_FALSE(verify_periodic_independent(*even_scale.lower_witness, DistanceSet{2, 6}));
    auto via_graph = compute(DistanceSet{1, 4, 7});
    CHECK(via_graph.method == RatioMethod::stategraph);
    auto via_search = compute(DistanceSet{1, 4, 7}, ComputeOptions{MethodChoice::search, {}, {}});
    CHECK(via_search.method == RatioMethod::search);
    CHECK(via_search.value == via_graph.value);
    StateGraphLimits tiny;
    tiny.max_arcs = 5;
    auto fallback = compute(DistanceSet{1, 4, 7}, ComputeOptions{MethodChoice::automatic, {}, tiny});
    CHECK(fallback.method == RatioMethod::search);
    CHECK(fallback.value == Rational(3, 8));
    CHECK_THROWS_AS(compute(DistanceSet{1, 4, 7}, ComputeOptions{MethodChoice::stategraph, {}, tiny}), ResourceError);
}

TEST_CASE("fractional chromatic number") {
    CHECK(fractional_chromatic(DistanceSet{1, 2, 3}) == Rational(4));
    CHECK(fractional_chromatic(DistanceSet{1, 4}) == Rational(5, 2));
    CHECK(fractional_chromatic(DistanceSet{3, 5, 7}) == Rational(2));
    ComputeOptions starved{MethodChoice::search, WorkBudget{100, 0}, {}};
    CHECK_THROWS_AS(fractional_chromatic(DistanceSet{1, 20, 21}, starved), InexactError);
}
