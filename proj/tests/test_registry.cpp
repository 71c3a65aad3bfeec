#include <doctest.h>

#include "dgratio/registry.hpp"

#include <set>

using namespace dgratio;

namespace {

Rational value_at(const std::string& id, Params p) {
    auto v = predict(find_family(id), p);
    REQUIRE(v.has_value());
    return *v;
}

BlockList expand(const std::string& notation) { return expand_blocks(parse_block_notation(notation)); }

}  // namespace

TEST_CASE("catalog ids are unique and every family is complete") {
    std::set<std::string> ids;
    for (const auto& f : list_families()) {
        CHECK(ids.insert(f.id).second);
        CHECK(f.in_domain);
        CHECK(f.set_builder);
        CHECK(f.points);
        CHECK(!f.anchor.empty());
        if (f.kind == FamilyKind::limit) {
            CHECK(f.limit_rule);
            CHECK(f.witness_builder);
        } else {
            CHECK(f.value_rule);
        }
    }
    auto cat = catalog_json();
    CHECK(cat.size() == list_families().size());
    CHECK(cat[0].contains("anchor"));
    CHECK(cat[0].contains("domain"));
}

TEST_CASE("conjectures are never tagged as theorems") {
    for (const char* id : {"1-7-2i", "1-l-2i", "1-2k-2k2l-conj", "1-6-k", "1-8-k", "1-k-kp5", "1-k-kp7"})
        CHECK(find_family(id).kind == FamilyKind::conjecture);
    for (const char* id : {"1-4-k", "1-k-kp1", "1-k-kp3", "1-3-2i", "1-5-2i", "1-2k-2k2l", "consecutive"})
        CHECK(find_family(id).kind == FamilyKind::theorem);
    CHECK(find_family("zhu-7").findings_only);
    CHECK(find_family("lim-1-2i-k").kind == FamilyKind::limit);
    CHECK_THROWS_AS(find_family("no-such-family"), std::invalid_argument);
}

TEST_CASE("value rules at documented points") {
    CHECK(value_at("1-4-k", {10}) == Rational(4, 11));
    CHECK(value_at("1-4-k", {12}) == Rational(5, 13));
    CHECK(value_at("1-4-k", {6}) == Rational(2, 5));
    CHECK(value_at("1-4-k", {8}) == Rational(1, 3));
    CHECK(value_at("1-k-kp1", {2}) == Rational(1, 4));
    CHECK(value_at("1-k-kp1", {3}) == Rational(2, 7));
    CHECK(value_at("1-k-kp3", {4}) == Rational(3, 8));
    CHECK(value_at("1-k-kp3", {3}) == Rational(1, 3));
    CHECK(value_at("1-3-2i", {4}) == Rational(4, 11));
    CHECK(value_at("1-5-2i", {5}) == Rational(1, 3));
    CHECK(value_at("consecutive", {3}) == Rational(1, 4));
    CHECK(value_at("1-2k", {3}) == Rational(3, 7));
    CHECK(value_at("pair", {1, 4}) == Rational(2, 5));
    CHECK(value_at("lz-2", {1, 2}) == Rational(1, 4));
    CHECK(value_at("lz-2", {1, 3}) == Rational(2, 7));
    CHECK(value_at("prefix-and-k", {3, 6}) == Rational(2, 7));
    CHECK(value_at("1-6-k", {24}) == Rational(2, 5));
    CHECK(value_at("1-k-kp7", {8}) == Rational(7, 16));
}

TEST_CASE("exception lists suppress predictions") {
    CHECK_FALSE(predict(find_family("1-k-kp5"), {7}));
    CHECK_FALSE(predict(find_family("1-k-kp5"), {12}));
    CHECK(predict(find_family("1-k-kp5"), {13}));
    for (std::int64_t k : {7, 10, 12, 17}) CHECK_FALSE(predict(find_family("1-6-k"), {k}));
    for (std::int64_t k : {9, 10, 14, 16, 18, 23, 25, 32}) CHECK_FALSE(predict(find_family("1-8-k"), {k}));
    for (std::int64_t k : {9, 11, 16, 18, 25}) CHECK_FALSE(predict(find_family("1-k-kp7"), {k}));
    for (const auto& p : find_family("1-k-kp5").points(1, 20)) {
        CHECK(p[0] != 7);
        CHECK(p[0] != 12);
    }
    CHECK_FALSE(predict(find_family("1-4-k"), {4}));
    CHECK_FALSE(predict(find_family("lim-1-odd-2k"), {5, 1}));
}

TEST_CASE("closed_form reverse lookup") {
    auto a = closed_form(DistanceSet{1, 4, 12});
    REQUIRE(a);
    CHECK(a->family == "1-4-k");
    CHECK(a->predicted == Rational(5, 13));

    auto b = closed_form(DistanceSet{1, 3, 5});
    REQUIRE(b);
    CHECK(b->family == "all-odd");
    CHECK(b->predicted == Rational(1, 2));

    CHECK_FALSE(closed_form(DistanceSet{2, 3, 7}));

    // Normalization happens first.
    auto c = closed_form(DistanceSet{3, 12, 36});
    REQUIRE(c);
    CHECK(c->family == "1-4-k");
    CHECK(c->set == DistanceSet{1, 4, 12});

    auto d = closed_form(DistanceSet{1, 6, 24});
    REQUIRE(d);
    CHECK(d->kind == FamilyKind::conjecture);
    CHECK(d->predicted == Rational(2, 5));

    // An excluded parameter falls through to whatever else covers the set.
    CHECK_FALSE(closed_form(DistanceSet{1, 7, 12}));
}

TEST_CASE("closed_form prefers theorems and never answers with a limit") {
    for (std::int64_t a = 1; a <= 7; ++a)
        for (std::int64_t b = a + 1; b <= 9; ++b)
            for (std::int64_t c = b + 1; c <= 12; ++c) {
                auto cf = closed_form(DistanceSet{a, b, c});
                if (!cf) continue;
                CHECK(cf->kind != FamilyKind::limit);
                const auto& f = find_family(cf->family);
                if (f.id != "all-odd") CHECK(f.set_builder(cf->params) == cf->set);
            }
}

TEST_CASE("every witness builder gives an independent set of the stated density") {
    for (const auto& f : list_families()) {
        if (!f.witness_builder) continue;
        int checked = 0;
        for (const auto& p : f.points(f.sample_lo, f.sample_hi)) {
            auto w = check_witness(f, p);
            if (!w) continue;
            ++checked;
            INFO(f.id << " " << format_params(f, p) << " " << w->notation);
            CHECK(w->independent);
            if (f.kind == FamilyKind::limit) CHECK(w->density <= f.limit_rule(p));
            else if (f.kind != FamilyKind::upper_bound) CHECK(w->density == f.value_rule(p));
        }
        INFO(f.id);
        CHECK(checked >= 5);
    }
}

TEST_CASE("near-miss witness patterns fall short of the family value") {
    // {1,6,k}, k = 7i+3: (2 2 3)^{i-1} 2 3 4 3 has period 7i+5 and is not independent.
    for (std::int64_t i = 3; i <= 6; ++i) {
        const std::int64_t k = 7 * i + 3;
        BlockList bl = expand("(2 2 3)^" + std::to_string(i - 1) + " 2 3 4 3");
        CHECK(verify_periodic_independent(bl, DistanceSet{1, 6, k}));
        CHECK(block_density(bl) == Rational(3 * i + 1, 7 * i + 5));
        CHECK(block_density(bl) < value_at("1-6-k", {k}));
    }
    // {1,k,k+3}, k = 5i: (2 3)^{i-1} 3^4 has one 3-block too many.
    for (std::int64_t i = 2; i <= 6; ++i) {
        BlockList bl = expand("(2 3)^" + std::to_string(i - 1) + " 3^4");
        CHECK(block_density(bl) == Rational(2 * i + 2, 5 * i + 7));
        CHECK(block_density(bl) < value_at("1-k-kp3", {5 * i}));
    }
    // {1,k,k+1}, k = 3i+2: 3^{i-1} 4 has density i/(3i+1), the value for k = 3i-1.
    for (std::int64_t i = 2; i <= 6; ++i) {
        BlockList bl = expand("3^" + std::to_string(i - 1) + " 4");
        CHECK(block_density(bl) == value_at("1-k-kp1", {3 * i - 1}));
        CHECK(block_density(bl) < value_at("1-k-kp1", {3 * i + 2}));
    }
}

TEST_CASE("verify_family examples") {
    auto v = verify_family("1-3-2i", 2, 8);
    REQUIRE(v.size() == 7);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const std::int64_t i = static_cast<std::int64_t>(j) + 2;
        CHECK(v[j].params == Params{i});
        CHECK(v[j].predicted == Rational(i, 2 * i + 3));
        CHECK(v[j].agreement == Agreement::match);
        CHECK(v[j].outcome == Outcome::pass);
    }
    for (const auto& r : verify_family("1-k-kp1", 2, 12)) CHECK(r.agreement == Agreement::match);
    auto c = verify_family("consecutive", 1, 6);
    REQUIRE(c.size() == 6);
    for (const auto& r : c) CHECK(*r.computed == Rational(1, r.params[0] + 1));
    CHECK_THROWS_AS(verify_family("nope", 1, 2), std::invalid_argument);
}

TEST_CASE("verdicts are ordered and independent of the thread count") {
    VerifyOptions one;
    one.threads = 1;
    VerifyOptions many;
    many.threads = 4;
    auto a = verify_family("1-4-k", 5, 14, one);
    auto b = verify_family("1-4-k", 5, 14, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].params == b[j].params);
        CHECK(a[j].computed == b[j].computed);
        CHECK(a[j].outcome == b[j].outcome);
    }
}

TEST_CASE("known counterexamples surface as findings, not failures") {
    // Witness 2^3 3 2^2 3 ... attains 4/11 in G({1,10,18}).
    auto v = verify_family("1-2k-2k2l-conj", 5, 5);
    bool saw = false;
    for (const auto& r : v)
        if (r.params == Params{5, 4}) {
            saw = true;
            CHECK(r.computed == Rational(4, 11));
            CHECK(r.outcome == Outcome::finding);
        }
    CHECK(saw);

    auto e = verify_family("1-8-k", 11, 11);
    REQUIRE(e.size() == 1);
    CHECK(*e[0].computed == Rational(7, 19));
    CHECK(e[0].outcome == Outcome::finding);

    // {1,3,8} sits below 3/8; the bound allows finitely many such triples.
    const auto& z = find_family("zhu-7");
    ComputeOptions co;
    auto r = judge(z, {8, 1, 3}, compute(DistanceSet{1, 3, 8}, co));
    CHECK(r.outcome == Outcome::finding);

    // k = 1 with l >= 2 contradicts the {1,2,3k} value.
    auto k1 = verify_family("1-2k-2k2l-conj", 1, 1);
    for (const auto& x : k1)
        if (x.params[1] >= 2) CHECK(x.outcome == Outcome::finding);
}

TEST_CASE("bound families check the right direction") {
    for (const char* id : {"zhu-4-lower", "zhu-4-upper", "zhu-5-lower", "zhu-5-upper", "zhu-6"}) {
        for (const auto& r : verify_family(id, 1, 3)) {
            INFO(id << " " << r.set.brace_str());
            CHECK(r.outcome != Outcome::failure);
        }
    }
    // A common divisor takes the triple outside the stated parameterization.
    CHECK_FALSE(find_family("zhu-3").in_domain({3, 1}));
    CHECK_FALSE(find_family("zhu-4-lower").in_domain({2, 1}));
}

TEST_CASE("judge classifies against bounds when the value is open") {
    const auto& f = find_family("1-4-k");
    RatioReport open(DistanceSet{1, 4, 10});
    open.lower = Rational(1, 3);
    open.upper = Rational(1, 2);
    auto u = judge(f, {10}, open);
    CHECK(u.agreement == Agreement::unresolved);
    CHECK(u.outcome == Outcome::unresolved);

    RatioReport wrong(DistanceSet{1, 4, 10});
    wrong.lower = Rational(1, 5);
    wrong.upper = Rational(1, 4);
    auto w = judge(f, {10}, wrong);
    CHECK(w.agreement == Agreement::mismatch);
    CHECK(w.outcome == Outcome::failure);

    const auto& g = find_family("1-6-k");
    auto cw = judge(g, {24}, wrong);
    CHECK(cw.outcome == Outcome::finding);
}
