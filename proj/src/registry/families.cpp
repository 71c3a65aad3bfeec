#include "families.hpp"

#include <numeric>

namespace dgratio::detail {

namespace {

using I = std::int64_t;

I mod(I a, I m) {
    I r = a % m;
    return r < 0 ? r + m : r;
}

// (nk*k + nc) / (dk*k + dc) on one residue class.
struct Linear {
    I residue, nk, nc, dk, dc;
};

struct ResidueTable {
    I modulus;
    std::vector<Linear> rows;  // rows[r].residue == r

    Rational at(I k) const {
        const Linear& r = rows[static_cast<std::size_t>(mod(k, modulus))];
        return Rational(r.nk * k + r.nc, r.dk * k + r.dc);
    }
};

BlockStructure seq(std::initializer_list<I> sizes) {
    BlockStructure b;
    for (auto s : sizes) b.lit(s);
    return b;
}

BlockStructure lp(I size, I exponent) {
    BlockStructure b;
    b.lit_pow(size, exponent);
    return b;
}

BlockStructure gp(BlockStructure body, I exponent) {
    BlockStructure b;
    b.group_pow(std::move(body), exponent);
    return b;
}

BlockStructure cat(std::initializer_list<BlockStructure> parts) {
    BlockStructure b;
    for (const auto& p : parts) b.append(p);
    return b;
}

BlockStructure from_list(const BlockList& bl) {
    BlockStructure b;
    for (auto s : bl.sizes) b.lit(s);
    return b;
}

std::vector<I> elems(const DistanceSet& s) { return {s.begin(), s.end()}; }

bool is_set(const DistanceSet& s, std::vector<I> v) {
    for (auto x : v)
        if (x <= 0) return false;
    return DistanceSet(std::move(v)) == s;
}

std::vector<I> range(I a, I b) {
    std::vector<I> v;
    for (I x = a; x <= b; ++x) v.push_back(x);
    return v;
}

// Integers of [1, m] missing from S, where m = max(S).
std::vector<I> missing(const DistanceSet& s) {
    std::vector<I> out;
    for (I x = 1; x <= s.max_element(); ++x)
        if (!s.contains(x)) out.push_back(x);
    return out;
}

// [m] minus a set of removed distances.
DistanceSet complement(I m, const std::vector<I>& removed) {
    std::vector<I> v;
    for (I x = 1; x <= m; ++x)
        if (std::find(removed.begin(), removed.end(), x) == removed.end()) v.push_back(x);
    return DistanceSet(v);
}

bool complement_nonempty(I m, I lo, I hi) { return lo > 1 || hi < m; }

using Secondary = std::function<std::vector<Params>(I)>;

// Wraps the side conditions with arity and lower-bound checks and derives the point generator.
void finish(FamilyDescriptor& f, Secondary secondary = {}) {
    auto raw = f.in_domain;
    auto specs = f.params;
    f.in_domain = [raw, specs](const Params& p) {
        if (p.size() != specs.size()) return false;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j] < specs[j].min) return false;
        return !raw || raw(p);
    };
    auto in = f.in_domain;
    f.points = [in, secondary](I lo, I hi) {
        std::vector<Params> out;
        for (I x = lo; x <= hi; ++x) {
            auto cands = secondary ? secondary(x) : std::vector<Params>{{x}};
            for (auto& p : cands)
                if (in(p)) out.push_back(p);
        }
        return out;
    };
}

// Set {1, a, b} recognized as (a, b) with 1 < a < b.
std::optional<std::pair<I, I>> one_a_b(const DistanceSet& s) {
    if (s.size() != 3) return std::nullopt;
    auto v = elems(s);
    if (v[0] != 1) return std::nullopt;
    return std::pair{v[1], v[2]};
}

FamilyDescriptor one_x_k(std::string id, FamilyKind kind, I x, I kmin, std::vector<I> exceptions,
                         ResidueTable table, std::string domain, std::string anchor) {
    FamilyDescriptor f;
    f.id = std::move(id);
    f.kind = kind;
    f.params = {{"k", kmin}};
    f.set_text = "{1," + std::to_string(x) + ",k}";
    f.domain = std::move(domain);
    f.anchor = std::move(anchor);
    f.in_domain = [x, exceptions](const Params& p) {
        return p[0] != x && std::find(exceptions.begin(), exceptions.end(), p[0]) == exceptions.end();
    };
    f.set_builder = [x](const Params& p) { return DistanceSet{1, x, p[0]}; };
    f.value_rule = [table](const Params& p) { return table.at(p[0]); };
    f.match = [x](const DistanceSet& s) -> std::optional<Params> {
        auto ab = one_a_b(s);
        if (ab && ab->first == x) return Params{ab->second};
        return std::nullopt;
    };
    f.sample_lo = kmin;
    f.sample_hi = kmin + 30;
    return f;
}

FamilyDescriptor one_k_kpd(std::string id, FamilyKind kind, I d, I kmin, std::vector<I> exceptions,
                           ResidueTable table, std::string domain, std::string anchor) {
    FamilyDescriptor f;
    f.id = std::move(id);
    f.kind = kind;
    f.params = {{"k", kmin}};
    f.set_text = "{1,k,k+" + std::to_string(d) + "}";
    f.domain = std::move(domain);
    f.anchor = std::move(anchor);
    f.in_domain = [exceptions](const Params& p) {
        return std::find(exceptions.begin(), exceptions.end(), p[0]) == exceptions.end();
    };
    f.set_builder = [d](const Params& p) { return DistanceSet{1, p[0], p[0] + d}; };
    f.value_rule = [table](const Params& p) { return table.at(p[0]); };
    f.match = [d](const DistanceSet& s) -> std::optional<Params> {
        auto ab = one_a_b(s);
        if (ab && ab->second - ab->first == d) return Params{ab->first};
        return std::nullopt;
    };
    f.sample_lo = kmin;
    f.sample_hi = kmin + 30;
    return f;
}

// {1, l, 2i} with a single-period witness 2^{i-1} (l+2).
FamilyDescriptor one_odd_even(std::string id, FamilyKind kind, I l, I imin, std::string anchor) {
    FamilyDescriptor f;
    f.id = std::move(id);
    f.kind = kind;
    f.params = {{"i", imin}};
    f.set_text = "{1," + std::to_string(l) + ",2i}";
    f.domain = "i >= " + std::to_string(imin);
    f.anchor = std::move(anchor);
    f.set_builder = [l](const Params& p) { return DistanceSet{1, l, 2 * p[0]}; };
    f.value_rule = [l](const Params& p) { return Rational(p[0], 2 * p[0] + l); };
    f.witness_builder = [l](const Params& p) -> std::optional<BlockStructure> {
        return cat({lp(2, p[0] - 1), seq({l + 2})});
    };
    f.match = [l](const DistanceSet& s) -> std::optional<Params> {
        auto ab = one_a_b(s);
        if (ab && ab->first == l && ab->second % 2 == 0) return Params{ab->second / 2};
        return std::nullopt;
    };
    f.sample_lo = imin;
    f.sample_hi = imin + 12;
    return f;
}

// Witness for {1, k, 2k, ..., lk} from the two-parity construction.
BlockList multiples_witness(I k, I l) {
    const I period = k * (l + 1);
    std::vector<I> pos;
    if (k % 2 == 1) {
        for (I j = 0; j < k; ++j) pos.push_back(2 * j);
    } else {
        const I h = k / 2;
        for (I j = 0; j < k; ++j) pos.push_back(2 * j + (j >= h ? 1 : 0));
    }
    return blocks_from_positions(pos, period);
}

void add_basic(std::vector<FamilyDescriptor>& out) {
    {
        FamilyDescriptor f;
        f.id = "all-odd";
        f.params = {{"m", 1}};
        f.set_text = "any set of odd distances (swept as {1,3,...,m})";
        f.domain = "m odd; the value holds for every all-odd S";
        // Every odd distance joins opposite parities, so the even integers are independent.
        f.anchor = "observation: S contains only odd numbers => ᾱ(S) = 1/2; Zhu 2002 part 1 for |S| = 3";
        f.in_domain = [](const Params& p) { return p[0] % 2 == 1; };
        f.set_builder = [](const Params& p) {
            std::vector<I> v;
            for (I x = 1; x <= p[0]; x += 2) v.push_back(x);
            return DistanceSet(v);
        };
        f.value_rule = [](const Params&) { return Rational(1, 2); };
        f.witness_builder = [](const Params&) -> std::optional<BlockStructure> { return seq({2}); };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            for (auto x : s)
                if (x % 2 == 0) return std::nullopt;
            return Params{s.max_element()};
        };
        f.sample_lo = 1;
        f.sample_hi = 21;
        finish(f);
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "consecutive";
        f.params = {{"l", 1}};
        f.set_text = "{1,2,...,l}";
        f.domain = "l >= 1";
        f.anchor = "ᾱ({1,2,…,ℓ}) = 1/(ℓ+1); Gao–Zhu 1996 part 1: ᾱ([1,k']) = 1/(k'+1)";
        f.set_builder = [](const Params& p) { return DistanceSet(range(1, p[0])); };
        f.value_rule = [](const Params& p) { return Rational(1, p[0] + 1); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> { return seq({p[0] + 1}); };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            if (s.max_element() == static_cast<I>(s.size())) return Params{s.max_element()};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 12;
        finish(f);
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "interval";
        f.params = {{"k", 1}, {"kp", 1}};
        f.set_text = "[k,k']";
        f.domain = "k <= k', 4k' >= 5k";
        f.anchor = "Gao–Zhu 1996 part 2: k' >= (5/4)k => ᾱ([k,k']) = k/(k+k')";
        f.in_domain = [](const Params& p) { return p[0] <= p[1] && 4 * p[1] >= 5 * p[0]; };
        f.set_builder = [](const Params& p) { return DistanceSet(range(p[0], p[1])); };
        f.value_rule = [](const Params& p) { return Rational(p[0], p[0] + p[1]); };
        // k consecutive integers, then a gap clearing every distance up to k'.
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return cat({lp(1, p[0] - 1), seq({p[1] + 1})});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.back() - v.front() + 1 != static_cast<I>(v.size())) return std::nullopt;
            return Params{v.front(), v.back()};
        };
        f.sample_lo = 1;
        f.sample_hi = 8;
        finish(f, [](I k) {
            std::vector<Params> v;
            for (I kp = (5 * k + 3) / 4; kp <= (5 * k + 3) / 4 + 3; ++kp) v.push_back({k, kp});
            return v;
        });
        out.push_back(f);
    }

    // D_{m,k,s} = [m] minus {k, 2k, ..., sk}; matched with m = max(S).
    auto dmks_match = [](const DistanceSet& s) -> std::optional<std::pair<I, I>> {
        auto m = missing(s);
        if (m.empty()) return std::nullopt;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[j] != static_cast<I>(j + 1) * m[0]) return std::nullopt;
        return std::pair{m[0], static_cast<I>(m.size())};
    };
    auto dmks_set = [](I m, I k, I s) {
        std::vector<I> removed;
        for (I j = 1; j <= s; ++j) removed.push_back(j * k);
        return complement(m, removed);
    };
    {
        FamilyDescriptor f;
        f.id = "clz-1";
        f.params = {{"m", 2}, {"k", 1}};
        f.set_text = "[m] \\ {k}";
        f.domain = "k <= m < 2k";
        f.anchor = "Chang–Liu–Zhu 1999 / Liu–Zhu 1999 part 1: 2k > m => ᾱ(D_{m,k,1}) = 1/k";
        f.in_domain = [](const Params& p) { return p[1] <= p[0] && p[0] < 2 * p[1]; };
        f.set_builder = [dmks_set](const Params& p) { return dmks_set(p[0], p[1], 1); };
        f.value_rule = [](const Params& p) { return Rational(1, p[1]); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> { return seq({p[1]}); };
        f.match = [dmks_match](const DistanceSet& s) -> std::optional<Params> {
            auto r = dmks_match(s);
            if (r && r->second == 1) return Params{s.max_element(), r->first};
            return std::nullopt;
        };
        f.sample_lo = 2;
        f.sample_hi = 12;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I k = 1; k <= m; ++k) v.push_back({m, k});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "clz-2";
        f.params = {{"m", 2}, {"k", 1}};
        f.set_text = "[m] \\ {k}";
        f.domain = "2k <= m";
        f.anchor = "Chang–Liu–Zhu 1999 / Liu–Zhu 1999 part 2: 2k <= m => ᾱ(D_{m,k,1}) = 2/(m+k+1)";
        f.in_domain = [](const Params& p) { return 2 * p[1] <= p[0]; };
        f.set_builder = [dmks_set](const Params& p) { return dmks_set(p[0], p[1], 1); };
        f.value_rule = [](const Params& p) { return Rational(2, p[0] + p[1] + 1); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return seq({p[1], p[0] + 1});
        };
        f.match = [dmks_match](const DistanceSet& s) -> std::optional<Params> {
            auto r = dmks_match(s);
            if (r && r->second == 1) return Params{s.max_element(), r->first};
            return std::nullopt;
        };
        f.sample_lo = 2;
        f.sample_hi = 12;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I k = 1; 2 * k <= m; ++k) v.push_back({m, k});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "clz-3";
        f.params = {{"m", 2}, {"k", 1}, {"s", 1}};
        f.set_text = "[m] \\ {k,2k,...,sk}";
        f.domain = "m >= (s+1)k";
        f.anchor = "Chang–Liu–Zhu 1999 / Liu–Zhu 1999 part 3: m >= (s+1)k => ᾱ(D_{m,k,s}) = (s+1)/(m+sk+1)";
        f.in_domain = [](const Params& p) { return p[0] >= (p[2] + 1) * p[1]; };
        f.set_builder = [dmks_set](const Params& p) { return dmks_set(p[0], p[1], p[2]); };
        f.value_rule = [](const Params& p) { return Rational(p[2] + 1, p[0] + p[2] * p[1] + 1); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return cat({lp(p[1], p[2]), seq({p[0] + 1})});
        };
        f.match = [dmks_match](const DistanceSet& s) -> std::optional<Params> {
            auto r = dmks_match(s);
            if (r) return Params{s.max_element(), r->first, r->second};
            return std::nullopt;
        };
        f.sample_lo = 2;
        f.sample_hi = 14;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I k = 1; 2 * k <= m; ++k)
                for (I s = 1; (s + 1) * k <= m; ++s) v.push_back({m, k, s});
            return v;
        });
        out.push_back(f);
    }

    // D_{m,[k,k']} = [m] minus the interval [k, k']; matched with m = max(S).
    auto interval_gap = [](const DistanceSet& s) -> std::optional<std::pair<I, I>> {
        auto m = missing(s);
        if (m.empty() || m.back() - m.front() + 1 != static_cast<I>(m.size())) return std::nullopt;
        return std::pair{m.front(), m.back()};
    };
    auto ll_set = [](I m, I lo, I hi) {
        std::vector<I> removed = range(lo, hi);
        return complement(m, removed);
    };
    {
        FamilyDescriptor f;
        f.id = "ll-1";
        f.params = {{"m", 2}, {"k", 1}, {"i", 0}};
        f.set_text = "[m] \\ [k,k+i]";
        f.domain = "k+i <= m < 2k";
        f.anchor = "Lam–Lin 2005 part 1: m < 2k => ᾱ(D_{m,[k,k+i]}) = 1/k";
        f.in_domain = [](const Params& p) {
            return p[1] + p[2] <= p[0] && p[0] < 2 * p[1] && complement_nonempty(p[0], p[1], p[1] + p[2]);
        };
        f.set_builder = [ll_set](const Params& p) { return ll_set(p[0], p[1], p[1] + p[2]); };
        f.value_rule = [](const Params& p) { return Rational(1, p[1]); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> { return seq({p[1]}); };
        f.match = [interval_gap](const DistanceSet& s) -> std::optional<Params> {
            auto g = interval_gap(s);
            if (g) return Params{s.max_element(), g->first, g->second - g->first};
            return std::nullopt;
        };
        f.sample_lo = 2;
        f.sample_hi = 12;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I k = 1; k <= m; ++k)
                for (I i = 0; k + i <= m; ++i) v.push_back({m, k, i});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "ll-2";
        f.params = {{"m", 2}, {"k", 2}, {"i", 1}};
        f.set_text = "[m] \\ [k,k+i]";
        f.domain = "1 <= i <= k-1, 2k <= m < 2k+2i";
        f.anchor = "Lam–Lin 2005 part 2: 2k <= m < 2k+2i, 1 <= i <= k-1 => ᾱ(D_{m,[k,k+i]}) = 2/(m+1)";
        f.in_domain = [](const Params& p) {
            return p[2] <= p[1] - 1 && 2 * p[1] <= p[0] && p[0] < 2 * p[1] + 2 * p[2];
        };
        f.set_builder = [ll_set](const Params& p) { return ll_set(p[0], p[1], p[1] + p[2]); };
        f.value_rule = [](const Params& p) { return Rational(2, p[0] + 1); };
        // Two gaps splitting m+1, each inside the removed interval.
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return seq({(p[0] + 1) / 2, p[0] + 1 - (p[0] + 1) / 2});
        };
        f.match = [interval_gap](const DistanceSet& s) -> std::optional<Params> {
            auto g = interval_gap(s);
            if (g) return Params{s.max_element(), g->first, g->second - g->first};
            return std::nullopt;
        };
        f.sample_lo = 4;
        f.sample_hi = 16;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I k = 2; 2 * k <= m; ++k)
                for (I i = 1; i < k; ++i) v.push_back({m, k, i});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "ll-3";
        f.params = {{"m", 2}, {"k", 2}, {"i", 1}};
        f.set_text = "[m] \\ [k,k+i]";
        f.domain = "1 <= i <= k-1, m >= 2k+2i";
        f.anchor = "Lam–Lin 2005 part 3: m >= 2k+2i, 1 <= i <= k-1 => ᾱ(D_{m,[k,k+i]}) = 2/(m+k+1)";
        f.in_domain = [](const Params& p) { return p[2] <= p[1] - 1 && p[0] >= 2 * p[1] + 2 * p[2]; };
        f.set_builder = [ll_set](const Params& p) { return ll_set(p[0], p[1], p[1] + p[2]); };
        f.value_rule = [](const Params& p) { return Rational(2, p[0] + p[1] + 1); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return seq({p[1], p[0] + 1});
        };
        f.match = [interval_gap](const DistanceSet& s) -> std::optional<Params> {
            auto g = interval_gap(s);
            if (g) return Params{s.max_element(), g->first, g->second - g->first};
            return std::nullopt;
        };
        f.sample_lo = 6;
        f.sample_hi = 16;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I k = 2; 2 * k <= m; ++k)
                for (I i = 1; i < k; ++i) v.push_back({m, k, i});
            return v;
        });
        out.push_back(f);
    }
    // Parts 4 and 5 write the removed interval as [k, sk+i]; matching uses the largest s.
    auto ll45_match = [interval_gap](const DistanceSet& s) -> std::optional<Params> {
        auto g = interval_gap(s);
        if (!g) return std::nullopt;
        const I k = g->first, s_ = g->second / k;
        return Params{s.max_element(), k, s_, g->second - s_ * k};
    };
    {
        FamilyDescriptor f;
        f.id = "ll-4";
        f.params = {{"m", 2}, {"k", 1}, {"s", 1}, {"i", 0}};
        f.set_text = "[m] \\ [k,sk+i]";
        f.domain = "sk+i <= m < (s+1)k";
        f.anchor = "Lam–Lin 2005 part 4: m < (s+1)k => ᾱ(D_{m,[k,sk+i]}) = 1/k";
        f.in_domain = [](const Params& p) {
            const I hi = p[2] * p[1] + p[3];
            return p[1] <= hi && hi <= p[0] && p[0] < (p[2] + 1) * p[1] && complement_nonempty(p[0], p[1], hi);
        };
        f.set_builder = [ll_set](const Params& p) { return ll_set(p[0], p[1], p[2] * p[1] + p[3]); };
        f.value_rule = [](const Params& p) { return Rational(1, p[1]); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> { return seq({p[1]}); };
        f.match = ll45_match;
        f.sample_lo = 2;
        f.sample_hi = 14;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I k = 1; k <= m; ++k)
                for (I s = 1; s * k <= m; ++s)
                    for (I i = 0; i < k && s * k + i <= m; ++i) v.push_back({m, k, s, i});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "ll-5";
        f.params = {{"m", 2}, {"k", 2}, {"s", 1}, {"i", 1}};
        f.set_text = "[m] \\ [k,sk+i]";
        f.domain = "1 <= i <= k-1, (s+1)k <= m < (s+1)k+i";
        f.anchor = "Lam–Lin 2005 part 5: (s+1)k <= m < (s+1)k+i => ᾱ(D_{m,[k,sk+i]}) = (s+1)/(m+1)";
        f.in_domain = [](const Params& p) {
            return p[3] <= p[1] - 1 && (p[2] + 1) * p[1] <= p[0] && p[0] < (p[2] + 1) * p[1] + p[3];
        };
        f.set_builder = [ll_set](const Params& p) { return ll_set(p[0], p[1], p[2] * p[1] + p[3]); };
        f.value_rule = [](const Params& p) { return Rational(p[2] + 1, p[0] + 1); };
        // s+1 gaps of size at least k summing to m+1, spread as evenly as possible.
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            const I n = p[2] + 1, r = p[0] + 1 - n * p[1], q = r / n, t = r % n;
            return cat({lp(p[1] + q + 1, t), lp(p[1] + q, n - t)});
        };
        f.match = ll45_match;
        f.sample_lo = 4;
        f.sample_hi = 16;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I k = 2; 2 * k <= m; ++k)
                for (I s = 1; (s + 1) * k <= m; ++s)
                    for (I i = 1; i < k; ++i) v.push_back({m, k, s, i});
            return v;
        });
        out.push_back(f);
    }
}

void add_small_sets(std::vector<FamilyDescriptor>& out) {
    {
        // Only a = 1 is kept: for a > 1 the stated value contradicts the two-element formula
        // (e.g. {2,3} has ᾱ = 2/5, not 1/2).
        FamilyDescriptor f;
        f.id = "lz-1";
        f.params = {{"m", 2}, {"b", 2}};
        f.set_text = "{1,2,...,m-1,b}";
        f.domain = "b >= m (the multiplier a is fixed at 1)";
        f.anchor = "Liu–Zhu 2004 part 1, read as the set {a,2a,…,(m−1)a,b}: k/(km+1) if b = km, else 1/m";
        f.in_domain = [](const Params& p) { return p[1] >= p[0]; };
        f.set_builder = [](const Params& p) {
            auto v = range(1, p[0] - 1);
            v.push_back(p[1]);
            return DistanceSet(v);
        };
        f.value_rule = [](const Params& p) {
            if (p[1] % p[0] == 0) {
                const I k = p[1] / p[0];
                return Rational(k, k * p[0] + 1);
            }
            return Rational(1, p[0]);
        };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            if (p[1] % p[0] != 0) return seq({p[0]});
            return cat({lp(p[0], p[1] / p[0] - 1), seq({p[0] + 1})});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            I run = 0;
            while (run < static_cast<I>(v.size()) && v[static_cast<std::size_t>(run)] == run + 1) ++run;
            if (run == static_cast<I>(v.size())) return Params{run, run};
            if (run + 1 == static_cast<I>(v.size())) return Params{run + 1, v.back()};
            return std::nullopt;
        };
        f.sample_lo = 2;
        f.sample_hi = 8;
        finish(f, [](I m) {
            std::vector<Params> v;
            for (I b = m; b <= 3 * m + 2; ++b) v.push_back({m, b});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "lz-2";
        f.params = {{"a", 1}, {"b", 2}};
        f.set_text = "{a,b,a+b}";
        f.domain = "a < b, gcd(a,b) = 1";
        f.anchor = "Liu–Zhu 2004 part 2: ᾱ({a,b,a+b}) = 1/3, (a+k)/(3a+3k+1), (a+2k+1)/(3a+6k+4) for b−a = 3k, 3k+1, 3k+2";
        f.in_domain = [](const Params& p) { return p[0] < p[1] && std::gcd(p[0], p[1]) == 1; };
        f.set_builder = [](const Params& p) { return DistanceSet{p[0], p[1], p[0] + p[1]}; };
        f.value_rule = [](const Params& p) {
            const I a = p[0], d = p[1] - p[0], k = d / 3;
            switch (d % 3) {
                case 0: return Rational(1, 3);                                // b − a = 3k
                case 1: return Rational(a + k, 3 * a + 3 * k + 1);            // b − a = 3k+1
                default: return Rational(a + 2 * k + 1, 3 * a + 6 * k + 4);  // b − a = 3k+2
            }
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.size() == 3 && v[2] == v[0] + v[1]) return Params{v[0], v[1]};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 6;
        finish(f, [](I a) {
            std::vector<Params> v;
            for (I b = a + 1; b <= a + 9; ++b) v.push_back({a, b});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "lz-3";
        f.params = {{"a", 1}, {"b", 2}};
        f.set_text = "{a,b,b-a,a+b}";
        f.domain = "a < b, gcd(a,b) = 1, a and b of different parity";
        f.anchor = "Liu–Zhu 2004 part 3: a ≢ b (mod 2) => ᾱ({a,b,b−a,a+b}) = 1/4";
        f.in_domain = [](const Params& p) {
            return p[0] < p[1] && std::gcd(p[0], p[1]) == 1 && (p[0] + p[1]) % 2 == 1;
        };
        f.set_builder = [](const Params& p) { return DistanceSet{p[0], p[1], p[1] - p[0], p[0] + p[1]}; };
        f.value_rule = [](const Params&) { return Rational(1, 4); };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            for (std::size_t x = 0; x < v.size(); ++x)
                for (std::size_t y = x + 1; y < v.size(); ++y)
                    if (is_set(s, {v[x], v[y], v[y] - v[x], v[x] + v[y]})) return Params{v[x], v[y]};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 6;
        finish(f, [](I a) {
            std::vector<Params> v;
            for (I b = a + 1; b <= a + 9; ++b) v.push_back({a, b});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "lz-4";
        f.params = {{"m", 1}};
        f.set_text = "{1,2m,2m+1,2m+2}";
        f.domain = "m >= 1";
        f.anchor = "Liu–Zhu 2004 part 4: ᾱ({1,2m,2m+1,2m+2}) = m/(4m+1)";
        f.set_builder = [](const Params& p) { return DistanceSet{1, 2 * p[0], 2 * p[0] + 1, 2 * p[0] + 2}; };
        f.value_rule = [](const Params& p) { return Rational(p[0], 4 * p[0] + 1); };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.size() == 4 && v[0] == 1 && v[1] % 2 == 0 && is_set(s, {1, v[1], v[1] + 1, v[1] + 2}))
                return Params{v[1] / 2};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 8;
        finish(f);
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "1-2k";
        f.params = {{"k", 1}};
        f.set_text = "{1,2k}";
        f.domain = "k >= 1";
        f.anchor = "Chang–Huang–Zhu 1998 / Collins, special case: ᾱ({1,2k}) = k/(2k+1)";
        f.set_builder = [](const Params& p) { return DistanceSet{1, 2 * p[0]}; };
        f.value_rule = [](const Params& p) { return Rational(p[0], 2 * p[0] + 1); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return cat({lp(2, p[0] - 1), seq({3})});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.size() == 2 && v[0] == 1 && v[1] % 2 == 0) return Params{v[1] / 2};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 12;
        finish(f);
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "pair";
        f.params = {{"a", 1}, {"b", 2}};
        f.set_text = "{a,b}";
        f.domain = "a < b, gcd(a,b) = 1, not both odd";
        f.anchor = "Chang–Huang–Zhu 1998 / Collins part 2: ᾱ({a,b}) = (a+b−1)/(2a+2b)";
        f.in_domain = [](const Params& p) {
            return p[0] < p[1] && std::gcd(p[0], p[1]) == 1 && (p[0] % 2 == 0 || p[1] % 2 == 0);
        };
        f.set_builder = [](const Params& p) { return DistanceSet{p[0], p[1]}; };
        f.value_rule = [](const Params& p) { return Rational(p[0] + p[1] - 1, 2 * (p[0] + p[1])); };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.size() == 2) return Params{v[0], v[1]};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 6;
        finish(f, [](I a) {
            std::vector<Params> v;
            for (I b = a + 1; b <= a + 9; ++b) v.push_back({a, b});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "zhu-2";
        f.params = {{"k", 1}};
        f.set_text = "{1,2,3k}";
        f.domain = "k >= 1";
        f.anchor = "Zhu 2002 part 2: ᾱ({1,2,3k}) = k/(3k+1)";
        f.set_builder = [](const Params& p) { return DistanceSet{1, 2, 3 * p[0]}; };
        f.value_rule = [](const Params& p) { return Rational(p[0], 3 * p[0] + 1); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return cat({lp(3, p[0] - 1), seq({4})});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.size() == 3 && v[0] == 1 && v[1] == 2 && v[2] % 3 == 0) return Params{v[2] / 3};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 10;
        finish(f);
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "zhu-3";
        f.params = {{"a", 1}, {"k", 1}};
        f.set_text = "{a,a+3k,2a+3k}";
        f.domain = "a, k >= 1, gcd(a,b,c) = 1";
        f.anchor = "Zhu 2002 part 3: b = a+3k, c = 2a+3k => ᾱ = 1/3";
        f.in_domain = [](const Params& p) { return std::gcd(p[0], 3 * p[1]) == 1; };
        f.set_builder = [](const Params& p) { return DistanceSet{p[0], p[0] + 3 * p[1], 2 * p[0] + 3 * p[1]}; };
        f.value_rule = [](const Params&) { return Rational(1, 3); };
        // Multiples of 3 avoid every distance when 3 does not divide a.
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            if (p[0] % 3 == 0) return std::nullopt;
            return seq({3});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.size() == 3 && v[2] == v[0] + v[1] && (v[1] - v[0]) % 3 == 0) return Params{v[0], (v[1] - v[0]) / 3};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 6;
        finish(f, [](I a) {
            std::vector<Params> v;
            for (I k = 1; k <= 4; ++k) v.push_back({a, k});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "multiples";
        f.params = {{"k", 2}, {"l", 2}};
        f.set_text = "{1,k,2k,...,lk}";
        f.domain = "k, l >= 2";
        f.anchor = "ᾱ({1,k,2k,…,ℓk}) = 1/(ℓ+1) for k, ℓ >= 2";
        f.set_builder = [](const Params& p) {
            std::vector<I> v{1};
            for (I j = 1; j <= p[1]; ++j) v.push_back(j * p[0]);
            return DistanceSet(v);
        };
        f.value_rule = [](const Params& p) { return Rational(1, p[1] + 1); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return from_list(multiples_witness(p[0], p[1]));
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.size() < 3 || v[0] != 1) return std::nullopt;
            for (std::size_t j = 1; j < v.size(); ++j)
                if (v[j] != static_cast<I>(j) * v[1]) return std::nullopt;
            return Params{v[1], static_cast<I>(v.size()) - 1};
        };
        f.sample_lo = 2;
        f.sample_hi = 7;
        finish(f, [](I k) {
            std::vector<Params> v;
            for (I l = 2; l <= 4; ++l) v.push_back({k, l});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "prefix-and-k";
        f.params = {{"l", 2}, {"k", 3}};
        f.set_text = "{1,...,l-1,k}";
        f.domain = "l >= 2, k > l";
        f.anchor = "ᾱ({1,…,ℓ−1,k}) = 1/ℓ if ℓ ∤ k, k/(ℓ(k+1)) if ℓ | k";
        f.in_domain = [](const Params& p) { return p[1] > p[0]; };
        f.set_builder = [](const Params& p) {
            auto v = range(1, p[0] - 1);
            v.push_back(p[1]);
            return DistanceSet(v);
        };
        f.value_rule = [](const Params& p) {
            if (p[1] % p[0] != 0) return Rational(1, p[0]);
            return Rational(p[1], p[0] * (p[1] + 1));
        };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            if (p[1] % p[0] != 0) return seq({p[0]});
            return cat({lp(p[0], p[1] / p[0] - 1), seq({p[0] + 1})});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            I run = 0;
            while (run < static_cast<I>(v.size()) && v[static_cast<std::size_t>(run)] == run + 1) ++run;
            if (run >= 1 && run + 1 == static_cast<I>(v.size())) return Params{run + 1, v.back()};
            return std::nullopt;
        };
        f.sample_lo = 2;
        f.sample_hi = 7;
        finish(f, [](I l) {
            std::vector<Params> v;
            for (I k = l + 1; k <= 4 * l + 2; ++k) v.push_back({l, k});
            return v;
        });
        out.push_back(f);
    }
}

void add_two_distance_families(std::vector<FamilyDescriptor>& out) {
    {
        FamilyDescriptor f = one_odd_even("1-3-2i", FamilyKind::theorem, 3, 2, "ᾱ({1,3,2i}) = i/(2i+3), i >= 2; witness 2^{i−1} 5");
        finish(f);
        out.push_back(f);
    }
    {
        FamilyDescriptor f = one_odd_even("1-5-2i", FamilyKind::theorem, 5, 5, "ᾱ({1,5,2i}) = i/(2i+5), i >= 5; witness 2^{i−1} 7");
        finish(f);
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "1-2k-2k2l";
        f.params = {{"k", 1}, {"l", 1}};
        f.set_text = "{1,2k,2k+2l}";
        f.domain = "1 <= l <= 3, k >= l";
        f.anchor = "ᾱ({1,2k,2k+2ℓ}) = 2k/(4k+2ℓ) for 1 <= ℓ <= 3, k >= ℓ; witness 2^{k−1} 3 2^{k−1} (2ℓ+1)";
        f.in_domain = [](const Params& p) { return p[1] <= 3 && p[0] >= p[1]; };
        f.set_builder = [](const Params& p) { return DistanceSet{1, 2 * p[0], 2 * p[0] + 2 * p[1]}; };
        f.value_rule = [](const Params& p) { return Rational(2 * p[0], 4 * p[0] + 2 * p[1]); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            if (p[0] == 1) return seq({3});
            return cat({lp(2, p[0] - 1), seq({3}), lp(2, p[0] - 1), seq({2 * p[1] + 1})});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto ab = one_a_b(s);
            if (ab && ab->first % 2 == 0 && (ab->second - ab->first) % 2 == 0)
                return Params{ab->first / 2, (ab->second - ab->first) / 2};
            return std::nullopt;
        };
        f.sample_lo = 1;
        f.sample_hi = 10;
        finish(f, [](I k) {
            std::vector<Params> v;
            for (I l = 1; l <= 3; ++l) v.push_back({k, l});
            return v;
        });
        out.push_back(f);
    }
    {
        ResidueTable t{5, {
            {0, 2, 0, 5, 5},   // k ≡ 0 (mod 5): 2k/(5k+5)
            {1, 0, 2, 0, 5},   // k ≡ 1: 2/5
            {2, 2, 1, 5, 5},   // k ≡ 2: (2k+1)/(5k+5)
            {3, 2, -1, 5, 5},  // k ≡ 3: (2k−1)/(5k+5)
            {4, 0, 2, 0, 5},   // k ≡ 4: 2/5
        }};
        FamilyDescriptor f = one_x_k("1-4-k", FamilyKind::theorem, 4, 5, {}, t, "k > 4",
                                     "ᾱ({1,4,k}), k > 4, five residue classes mod 5");
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            const I k = p[0], i = k / 5;
            switch (k % 5) {
                case 0: return cat({gp(seq({2, 3}), i - 1), lp(3, 2)});  // (2 3)^{i−1} 3^2
                case 2: return cat({gp(seq({2, 3}), i), seq({3})});      // (2 3)^i 3
                case 3: return cat({gp(seq({2, 3}), i - 1), lp(3, 3)});  // (2 3)^{i−1} 3^3
                default: return seq({2, 3});                             // 2 3
            }
        };
        finish(f);
        out.push_back(f);
    }
    {
        ResidueTable t{3, {
            {0, 2, 0, 6, 3},  // k ≡ 0 (mod 3): 2k/(6k+3)
            {1, 0, 1, 0, 3},  // k ≡ 1: 1/3
            {2, 1, 1, 3, 6},  // k ≡ 2: (k+1)/(3k+6)
        }};
        FamilyDescriptor f = one_k_kpd("1-k-kp1", FamilyKind::theorem, 1, 2, {}, t, "k >= 2",
                                       "ᾱ({1,k,k+1}), k >= 2, three residue classes mod 3");
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            const I k = p[0];
            switch (k % 3) {
                case 0: {  // k = 3i: 2 3^{i−1} 5 3^{i−1}
                    const I i = k / 3;
                    return cat({seq({2}), lp(3, i - 1), seq({5}), lp(3, i - 1)});
                }
                case 1: return seq({3});
                default: {  // k = 3i−1: 3^{i−1} 4
                    const I i = (k + 1) / 3;
                    return cat({lp(3, i - 1), seq({4})});
                }
            }
        };
        f.sample_lo = 2;
        f.sample_hi = 32;
        finish(f);
        out.push_back(f);
    }
    {
        ResidueTable t{5, {
            {0, 2, 5, 5, 20},   // k ≡ 0 (mod 5): (2k+5)/(5k+20)
            {1, 0, 2, 0, 5},    // k ≡ 1: 2/5
            {2, 2, 6, 5, 20},   // k ≡ 2: (2k+6)/(5k+20)
            {3, 4, 3, 10, 15},  // k ≡ 3: (4k+3)/(10k+15)
            {4, 2, 7, 5, 20},   // k ≡ 4: (2k+7)/(5k+20)
        }};
        FamilyDescriptor f = one_k_kpd("1-k-kp3", FamilyKind::theorem, 3, 3, {}, t, "k >= 3",
                                       "ᾱ({1,k,k+3}), k >= 3, five residue classes mod 5");
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            const I k = p[0], i = k / 5;
            BlockStructure two_three = seq({2, 3});
            switch (k % 5) {
                case 0: return cat({gp(two_three, i - 1), lp(3, 3)});  // (2 3)^{i−1} 3^3
                case 1: return two_three;
                case 2: return cat({gp(two_three, i), lp(3, 2)});  // (2 3)^i 3^2
                case 3:  // (2 3)^i 2 (2 3)^i 2 5
                    return cat({gp(two_three, i), seq({2}), gp(two_three, i), seq({2, 5})});
                default: return cat({gp(two_three, i + 1), seq({3})});  // (2 3)^{i+1} 3
            }
        };
        finish(f);
        out.push_back(f);
    }
}

void add_conjectures(std::vector<FamilyDescriptor>& out) {
    {
        FamilyDescriptor f = one_odd_even("1-7-2i", FamilyKind::conjecture, 7, 11,
                                          "ᾱ({1,7,2i}) = i/(2i+7), asserted without proof; witness 2^{i−1} 9");
        f.domain = "i >= 11 (2i >= 3·7, as in the general odd-ℓ statement)";
        finish(f);
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "1-l-2i";
        f.kind = FamilyKind::conjecture;
        f.params = {{"i", 1}, {"l", 3}};
        f.set_text = "{1,l,2i}";
        f.domain = "l odd >= 3, 2i >= 3l";
        f.anchor = "ᾱ({1,ℓ,2i}) = i/(2i+ℓ) for odd ℓ >= 3, 2i >= 3ℓ; witness 2^{i−1} (ℓ+2)";
        f.in_domain = [](const Params& p) { return p[1] % 2 == 1 && 2 * p[0] >= 3 * p[1]; };
        f.set_builder = [](const Params& p) { return DistanceSet{1, p[1], 2 * p[0]}; };
        f.value_rule = [](const Params& p) { return Rational(p[0], 2 * p[0] + p[1]); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return cat({lp(2, p[0] - 1), seq({p[1] + 2})});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto ab = one_a_b(s);
            if (ab && ab->first % 2 == 1 && ab->second % 2 == 0) return Params{ab->second / 2, ab->first};
            return std::nullopt;
        };
        f.sample_lo = 5;
        f.sample_hi = 16;
        finish(f, [](I i) {
            std::vector<Params> v;
            for (I l = 3; 3 * l <= 2 * i; l += 2) v.push_back({i, l});
            return v;
        });
        out.push_back(f);
    }
    {
        ResidueTable t{7, {
            {0, 3, 0, 7, 7},   // k ≡ 0 (mod 7): 3k/(7k+7)
            {1, 0, 3, 0, 7},   // k ≡ 1: 3/7
            {2, 3, 1, 7, 7},   // k ≡ 2: (3k+1)/(7k+7)
            {3, 3, -2, 7, 7},  // k ≡ 3: (3k−2)/(7k+7)
            {4, 3, 2, 7, 7},   // k ≡ 4: (3k+2)/(7k+7)
            {5, 3, -1, 7, 7},  // k ≡ 5: (3k−1)/(7k+7)
            {6, 0, 3, 0, 7},   // k ≡ 6: 3/7
        }};
        FamilyDescriptor f = one_x_k("1-6-k", FamilyKind::conjecture, 6, 7, {7, 10, 12, 17}, t,
                                     "k > 6, k not in {7, 10, 12, 17}",
                                     "ᾱ({1,6,k}), k > 6, k ∉ {7,10,12,17}, seven residue classes mod 7; witnesses for k >= 21");
        // For k = 7i+3 the set (2 2 3)^{i−1} 2 3 4 3 has period 7i+5 and is not independent;
        // (2 2 3)^{i−3} (2 3)^5 attains (3i+1)/(7i+4).
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            const I k = p[0], i = k / 7;
            if (k < 21) return std::nullopt;
            BlockStructure two_two_three = seq({2, 2, 3});
            BlockStructure two_three = seq({2, 3});
            switch (k % 7) {
                case 0: return cat({gp(two_two_three, i - 2), gp(two_three, 3)});
                case 2: return cat({gp(two_two_three, i - 1), gp(two_three, 2)});
                case 3:
                    if (i < 3) return std::nullopt;
                    return cat({gp(two_two_three, i - 3), gp(two_three, 5)});
                case 4: return cat({gp(two_two_three, i), two_three});
                case 5: return cat({gp(two_two_three, i - 2), gp(two_three, 4)});
                default: return two_two_three;
            }
        };
        finish(f);
        out.push_back(f);
    }
    {
        ResidueTable t{9, {
            {0, 4, 0, 9, 9},    // k ≡ 0 (mod 9): 4k/(9k+9)
            {1, 0, 4, 0, 9},    // k ≡ 1: 4/9
            {2, 4, 1, 9, 9},    // k ≡ 2: (4k+1)/(9k+9)
            {3, 4, 24, 9, 72},  // k ≡ 3: (4k+24)/(9k+72)
            {4, 4, 2, 9, 9},    // k ≡ 4: (4k+2)/(9k+9)
            {5, 4, 1, 9, 16},   // k ≡ 5: (4k+1)/(9k+16)
            {6, 4, 3, 9, 9},    // k ≡ 6: (4k+3)/(9k+9)
            {7, 4, -1, 9, 9},   // k ≡ 7: (4k−1)/(9k+9)
            {8, 0, 4, 0, 9},    // k ≡ 8: 4/9
        }};
        FamilyDescriptor f = one_x_k("1-8-k", FamilyKind::conjecture, 8, 9, {9, 10, 14, 16, 18, 23, 25, 32}, t,
                                     "k > 8, k not in {9, 10, 14, 16, 18, 23, 25, 32}",
                                     "ᾱ({1,8,k}), k > 8, k ∉ {9,10,14,16,18,23,25,32}, nine residue classes mod 9");
        finish(f);
        out.push_back(f);
    }
    {
        ResidueTable t{7, {
            {0, 3, 14, 7, 42},   // k ≡ 0 (mod 7): (3k+14)/(7k+42)
            {1, 0, 3, 0, 7},     // k ≡ 1: 3/7
            {2, 3, 15, 7, 42},   // k ≡ 2: (3k+15)/(7k+42)
            {3, 6, 10, 14, 35},  // k ≡ 3: (6k+10)/(14k+35)
            {4, 3, 16, 7, 42},   // k ≡ 4: (3k+16)/(7k+42)
            {5, 3, 13, 7, 42},   // k ≡ 5: (3k+13)/(7k+42)
            {6, 3, 17, 7, 42},   // k ≡ 6: (3k+17)/(7k+42)
        }};
        FamilyDescriptor f = one_k_kpd("1-k-kp5", FamilyKind::conjecture, 5, 6, {7, 12}, t,
                                       "k >= 6, k not in {7, 12}",
                                       "ᾱ({1,k,k+5}), k >= 6, k ∉ {7,12}, seven residue classes mod 7");
        finish(f);
        out.push_back(f);
    }
    {
        ResidueTable t{9, {
            {0, 4, 27, 9, 72},   // k ≡ 0 (mod 9): (4k+27)/(9k+72)
            {1, 0, 4, 0, 9},     // k ≡ 1: 4/9
            {2, 4, 28, 9, 72},   // k ≡ 2: (4k+28)/(9k+72)
            {3, 8, 21, 18, 63},  // k ≡ 3: (8k+21)/(18k+63)
            {4, 4, 29, 9, 72},   // k ≡ 4: (4k+29)/(9k+72)
            {5, 4, -2, 9, 9},    // k ≡ 5: (4k−2)/(9k+9)
            {6, 4, 30, 9, 72},   // k ≡ 6: (4k+30)/(9k+72)
            {7, 4, 26, 9, 72},   // k ≡ 7: (4k+26)/(9k+72)
            {8, 4, 31, 9, 72},   // k ≡ 8: (4k+31)/(9k+72)
        }};
        FamilyDescriptor f = one_k_kpd("1-k-kp7", FamilyKind::conjecture, 7, 8, {9, 11, 16, 18, 25}, t,
                                       "k >= 8, k not in {9, 11, 16, 18, 25}",
                                       "ᾱ({1,k,k+7}), k >= 8, k ∉ {9,11,16,18,25}, nine residue classes mod 9");
        finish(f);
        out.push_back(f);
    }
    {
        // Listed last among conjectures: it is refuted for many (k, l), so reverse lookup
        // prefers the sharper families that also cover {1,2k,2k+2l}.
        FamilyDescriptor f;
        f.id = "1-2k-2k2l-conj";
        f.kind = FamilyKind::conjecture;
        f.params = {{"k", 1}, {"l", 1}};
        f.set_text = "{1,2k,2k+2l}";
        f.domain = "k, l >= 1 outside the proved range 1 <= l <= 3, k >= l";
        f.anchor = "ᾱ({1,2k,2k+2ℓ}) = 2k/(4k+2ℓ) for all k, ℓ >= 1; witness proved for 1 <= ℓ <= k";
        f.in_domain = [](const Params& p) { return !(p[1] <= 3 && p[0] >= p[1]); };
        f.set_builder = [](const Params& p) { return DistanceSet{1, 2 * p[0], 2 * p[0] + 2 * p[1]}; };
        f.value_rule = [](const Params& p) { return Rational(2 * p[0], 4 * p[0] + 2 * p[1]); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            if (p[1] > p[0] || p[0] < 2) return std::nullopt;
            return cat({lp(2, p[0] - 1), seq({3}), lp(2, p[0] - 1), seq({2 * p[1] + 1})});
        };
        f.match = [](const DistanceSet& s) -> std::optional<Params> {
            auto ab = one_a_b(s);
            if (ab && ab->first % 2 == 0 && (ab->second - ab->first) % 2 == 0)
                return Params{ab->first / 2, (ab->second - ab->first) / 2};
            return std::nullopt;
        };
        f.sample_lo = 4;
        f.sample_hi = 12;
        finish(f, [](I k) {
            std::vector<Params> v;
            for (I l = 1; l <= 8; ++l) v.push_back({k, l});
            return v;
        });
        out.push_back(f);
    }
}

void add_bounds(std::vector<FamilyDescriptor>& out) {
    auto triple = [](const Params& p) { return DistanceSet{p[0], p[0] + p[1], 2 * p[0] + p[1]}; };
    auto from_a_k = [](I offset) {
        // {a, a+3k+offset, 2a+3k+offset}
        return [offset](const DistanceSet& s) -> std::optional<Params> {
            auto v = elems(s);
            if (v.size() != 3 || v[2] != v[0] + v[1]) return std::nullopt;
            const I d = v[1] - v[0] - offset;
            if (d <= 0 || d % 3 != 0) return std::nullopt;
            return Params{v[0], d / 3};
        };
    };
    struct Spec {
        const char* id;
        FamilyKind kind;
        I offset;
        std::function<Rational(I, I)> rule;
        const char* anchor;
    };
    const Spec specs[] = {
        {"zhu-4-lower", FamilyKind::lower_bound, 1, [](I a, I k) { return Rational(a + k, 3 * (a + k) + 1); },
         "Zhu 2002 part 4: b = a+3k+1, c = 2a+3k+1 => (a+k)/(3(a+k)+1) <= ᾱ"},
        {"zhu-4-upper", FamilyKind::upper_bound, 1, [](I a, I k) { return Rational(a + 2 * k, 3 * (a + 2 * k) + 1); },
         "Zhu 2002 part 4: b = a+3k+1, c = 2a+3k+1 => ᾱ <= (a+2k)/(3(a+2k)+1)"},
        {"zhu-5-lower", FamilyKind::lower_bound, 2,
         [](I a, I k) { return Rational(a + 2 * k + 1, 3 * (a + 2 * k + 2) + 1); },
         "Zhu 2002 part 5: b = a+3k+2, c = 2a+3k+2 => (a+2k+1)/(3(a+2k+2)+1) <= ᾱ"},
        {"zhu-5-upper", FamilyKind::upper_bound, 2,
         [](I a, I k) { return Rational(a + 2 * k + 2, 3 * (a + 2 * k + 2) + 1); },
         "Zhu 2002 part 5: b = a+3k+2, c = 2a+3k+2 => ᾱ <= (a+2k+2)/(3(a+2k+2)+1)"},
    };
    for (const auto& sp : specs) {
        FamilyDescriptor f;
        f.id = sp.id;
        f.kind = sp.kind;
        f.params = {{"a", 1}, {"k", 1}};
        f.set_text = sp.offset == 1 ? "{a,a+3k+1,2a+3k+1}" : "{a,a+3k+2,2a+3k+2}";
        f.domain = "a, k >= 1, gcd(a,b,c) = 1";
        f.anchor = sp.anchor;
        const I off = sp.offset;
        f.in_domain = [off](const Params& p) { return std::gcd(p[0], 3 * p[1] + off) == 1; };
        f.set_builder = [triple, off](const Params& p) { return triple({p[0], 3 * p[1] + off}); };
        auto rule = sp.rule;
        f.value_rule = [rule](const Params& p) { return rule(p[0], p[1]); };
        f.match = from_a_k(off);
        f.sample_lo = 1;
        f.sample_hi = 6;
        finish(f, [](I a) {
            std::vector<Params> v;
            for (I k = 1; k <= 4; ++k) v.push_back({a, k});
            return v;
        });
        out.push_back(f);
    }
    auto triples = [](I c) {
        std::vector<Params> v;
        for (I a = 1; a < c; ++a)
            for (I b = a + 1; b < c; ++b) v.push_back({c, a, b});
        return v;
    };
    {
        // Bound statements over arbitrary triples are not used for reverse lookup.
        FamilyDescriptor f;
        f.id = "zhu-6";
        f.kind = FamilyKind::lower_bound;
        f.params = {{"c", 3}, {"a", 1}, {"b", 2}};
        f.set_text = "{a,b,c}";
        f.domain = "a < b < c not all odd, c != a+b, (a,b,c) != (1,2,3k)";
        f.anchor = "Zhu 2002 part 6: 1/3 <= ᾱ({a,b,c}) < 1/2";
        f.in_domain = [](const Params& p) {
            const I c = p[0], a = p[1], b = p[2];
            const bool all_odd = a % 2 == 1 && b % 2 == 1 && c % 2 == 1;
            return a < b && b < c && !all_odd && c != a + b && !(a == 1 && b == 2 && c % 3 == 0);
        };
        f.set_builder = [](const Params& p) { return DistanceSet{p[1], p[2], p[0]}; };
        f.value_rule = [](const Params&) { return Rational(1, 3); };
        f.strict_upper = Rational(1, 2);
        f.sample_lo = 3;
        f.sample_hi = 9;
        finish(f, triples);
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "zhu-7";
        f.kind = FamilyKind::lower_bound;
        f.params = {{"c", 3}, {"a", 1}, {"b", 2}};
        f.set_text = "{a,b,c}";
        f.domain = "a < b < c not all odd, c != 2b, b != 2a, c != 2a, c != a+b; finitely many unnamed exceptions";
        f.anchor = "Zhu 2002 part 7: 3/8 <= ᾱ({a,b,c}) < 1/2 up to finitely many exceptional triples";
        f.in_domain = [](const Params& p) {
            const I c = p[0], a = p[1], b = p[2];
            const bool all_odd = a % 2 == 1 && b % 2 == 1 && c % 2 == 1;
            return a < b && b < c && !all_odd && c != 2 * b && b != 2 * a && c != 2 * a && c != a + b;
        };
        f.set_builder = [](const Params& p) { return DistanceSet{p[1], p[2], p[0]}; };
        f.value_rule = [](const Params&) { return Rational(3, 8); };
        f.strict_upper = Rational(1, 2);
        f.findings_only = true;
        f.sample_lo = 3;
        f.sample_hi = 9;
        finish(f, triples);
        out.push_back(f);
    }
}

void add_limits(std::vector<FamilyDescriptor>& out) {
    {
        FamilyDescriptor f;
        f.id = "lim-1-odd-2k";
        f.kind = FamilyKind::limit;
        f.params = {{"k", 1}, {"i", 1}};
        f.set_text = "{1,2i+1,2k}";
        f.domain = "i >= 1; limit as k grows";
        f.anchor = "lim_k ᾱ({1,2i+1,2k}) = 1/2; finite-k structure 2^{k−1} (2i+3)";
        f.set_builder = [](const Params& p) { return DistanceSet{1, 2 * p[1] + 1, 2 * p[0]}; };
        f.limit_rule = [](const Params&) { return Rational(1, 2); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            return cat({lp(2, p[0] - 1), seq({2 * p[1] + 3})});
        };
        f.sample_lo = 1;
        f.sample_hi = 14;
        finish(f, [](I k) {
            std::vector<Params> v;
            for (I i = 1; i <= 3; ++i) v.push_back({k, i});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "lim-1-2i-k";
        f.kind = FamilyKind::limit;
        f.params = {{"k", 2}, {"i", 1}};
        f.set_text = "{1,2i,k}";
        f.domain = "i >= 1, k = (2i+1)q + r with q >= 1, 1 <= r < 2i+1; limit as k grows";
        f.anchor = "lim_k ᾱ({1,2i,k}) = i/(2i+1); finite-k structure (2^{i−1} 3)^{q−1} (2i+2+r)";
        f.in_domain = [](const Params& p) {
            const I m = 2 * p[1] + 1;
            return p[0] % m != 0 && p[0] / m >= 1;
        };
        f.set_builder = [](const Params& p) { return DistanceSet{1, 2 * p[1], p[0]}; };
        f.limit_rule = [](const Params& p) { return Rational(p[1], 2 * p[1] + 1); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            const I i = p[1], q = p[0] / (2 * i + 1), r = p[0] % (2 * i + 1);
            return cat({gp(cat({lp(2, i - 1), seq({3})}), q - 1), seq({2 * i + 2 + r})});
        };
        f.sample_lo = 4;
        f.sample_hi = 30;
        finish(f, [](I k) {
            std::vector<Params> v;
            for (I i = 1; i <= 3; ++i) v.push_back({k, i});
            return v;
        });
        out.push_back(f);
    }
    {
        FamilyDescriptor f;
        f.id = "lim-1-k-kp-odd";
        f.kind = FamilyKind::limit;
        f.params = {{"k", 2}, {"i", 0}};
        f.set_text = "{1,k,k+2i+1}";
        f.domain = "i >= 0, k >= 2; limit as k grows";
        f.anchor = "lim_k ᾱ({1,k,k+2i+1}) = (i+1)/(2i+3); finite-k structure (2^i 3)^{q−1} (2i+3+r), k+2i+2 = (2i+3)q+r";
        f.set_builder = [](const Params& p) { return DistanceSet{1, p[0], p[0] + 2 * p[1] + 1}; };
        f.limit_rule = [](const Params& p) { return Rational(p[1] + 1, 2 * p[1] + 3); };
        f.witness_builder = [](const Params& p) -> std::optional<BlockStructure> {
            const I i = p[1], m = 2 * i + 3, q = (p[0] + 2 * i + 2) / m, r = (p[0] + 2 * i + 2) % m;
            return cat({gp(cat({lp(2, i), seq({3})}), q - 1), seq({2 * i + 3 + r})});
        };
        f.sample_lo = 2;
        f.sample_hi = 30;
        finish(f, [](I k) {
            std::vector<Params> v;
            for (I i = 0; i <= 3; ++i) v.push_back({k, i});
            return v;
        });
        out.push_back(f);
    }
}

}  // namespace

std::vector<FamilyDescriptor> build_families() {
    std::vector<FamilyDescriptor> out;
    add_basic(out);
    add_small_sets(out);
    add_two_distance_families(out);
    add_conjectures(out);
    add_bounds(out);
    add_limits(out);
    return out;
}

}  // namespace dgratio::detail
