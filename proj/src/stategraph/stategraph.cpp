#include "dgratio/stategraph.hpp"

#include "dgratio/errors.hpp"
#include "dgratio/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

namespace dgratio {

int ProblemKind::window(const DistanceSet& s) const {
    const auto m = static_cast<int>(s.max_element());
    switch (tag) {
        case Tag::independence: return m;
        case Tag::domination: return 2 * m;
        case Tag::identifying_code: return 6 * m;
        case Tag::coloring: return m;
    }
    return m;
}

namespace {

using Successors = std::function<void(std::uint64_t, std::vector<std::uint64_t>&)>;

std::uint64_t low_bits(int n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

// Independent subsets of [0, len) avoiding `forbidden`, in depth-first order.
void enumerate_independent(const std::vector<int>& dist, int len, std::uint64_t forbidden,
                           std::vector<std::uint64_t>& out) {
    std::vector<std::uint64_t> conflict(static_cast<std::size_t>(len), 0);
    for (int p = 0; p < len; ++p)
        for (int d : dist)
            if (p - d >= 0) conflict[static_cast<std::size_t>(p)] |= 1ULL << (p - d);
    std::function<void(int, std::uint64_t)> rec = [&](int p, std::uint64_t mask) {
        if (p == len) {
            out.push_back(mask);
            return;
        }
        rec(p + 1, mask);
        if (!((forbidden >> p) & 1) && !(mask & conflict[static_cast<std::size_t>(p)])) rec(p + 1, mask | (1ULL << p));
    };
    rec(0, 0);
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > limit / std::max<std::uint64_t>(base, 1)) return limit + 1;
        r *= base;
    }
    return r;
}

// Generate arcs for every state in parallel, then prune to the doubly-extensible core.
StateGraph assemble(ProblemKind kind, int window, std::vector<std::uint64_t> states, std::size_t code_space,
                    const Successors& successors, const std::function<std::int64_t(std::uint64_t)>& weight,
                    const StateGraphLimits& limits) {
    std::vector<std::int32_t> index(code_space, -1);
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<std::int32_t>(i);

    const std::size_t n = states.size();
    std::vector<std::vector<std::uint32_t>> succ(n);
    std::atomic<std::uint64_t> arc_count{0};
    const std::size_t chunk = 256;
    const std::size_t chunks = (n + chunk - 1) / chunk;
    parallel_for(chunks, limits.threads, [&](std::size_t c) {
        std::vector<std::uint64_t> buf;
        for (std::size_t i = c * chunk; i < std::min(n, (c + 1) * chunk); ++i) {
            buf.clear();
            successors(states[i], buf);
            auto& out = succ[i];
            out.reserve(buf.size());
            for (auto code : buf) {
                auto j = index[code];
                if (j >= 0) out.push_back(static_cast<std::uint32_t>(j));
            }
            if (arc_count.fetch_add(out.size()) + out.size() > limits.max_arcs) {
                throw ResourceError("state graph exceeds " + std::to_string(limits.max_arcs) + " arcs (" +
                                    std::to_string(n) + " states, window " + std::to_string(window) + ")");
            }
        }
    });

    // Iterative pruning of states without a predecessor or successor.
    std::vector<std::uint32_t> indeg(n, 0), outdeg(n, 0);
    std::vector<std::vector<std::uint32_t>> pred(n);
    for (std::size_t u = 0; u < n; ++u) {
        outdeg[u] = static_cast<std::uint32_t>(succ[u].size());
        for (auto v : succ[u]) {
            ++indeg[v];
            pred[v].push_back(static_cast<std::uint32_t>(u));
        }
    }
    std::vector<std::uint8_t> dead(n, 0);
    std::vector<std::uint32_t> queue;
    for (std::size_t u = 0; u < n; ++u)
        if (indeg[u] == 0 || outdeg[u] == 0) {
            dead[u] = 1;
            queue.push_back(static_cast<std::uint32_t>(u));
        }
    while (!queue.empty()) {
        auto x = queue.back();
        queue.pop_back();
        for (auto v : succ[x])
            if (!dead[v] && --indeg[v] == 0) {
                dead[v] = 1;
                queue.push_back(v);
            }
        for (auto u : pred[x])
            if (!dead[u] && --outdeg[u] == 0) {
                dead[u] = 1;
                queue.push_back(u);
            }
    }
    pred.clear();

    std::vector<std::int64_t> remap(n, -1);
    StateGraph g;
    g.kind = kind;
    g.window = window;
    for (std::size_t u = 0; u < n; ++u)
        if (!dead[u]) {
            remap[u] = static_cast<std::int64_t>(g.states.size());
            g.states.push_back(states[u]);
        }
    for (std::size_t u = 0; u < n; ++u) {
        if (dead[u]) continue;
        g.graph.weight.push_back(weight(states[u]));
        for (auto v : succ[u])
            if (!dead[v]) g.graph.targets.push_back(static_cast<std::uint32_t>(remap[v]));
        g.graph.offsets.push_back(g.graph.targets.size());
        std::vector<std::uint32_t>().swap(succ[u]);
    }
    return g;
}

StateGraph build_independence(const DistanceSet& s, const StateGraphLimits& limits) {
    const int l = static_cast<int>(s.max_element());
    if (l > limits.independence_max_s || l > 30) {
        throw ResourceError("independence state graph needs 2^" + std::to_string(l) + " window states; cap is max(S) <= " +
                            std::to_string(limits.independence_max_s));
    }
    std::vector<int> dist(s.begin(), s.end());
    std::vector<std::uint64_t> states;
    enumerate_independent(dist, l, 0, states);
    std::sort(states.begin(), states.end());
    // T -> T' iff T ∪ (T'+l) is independent: T forbids the positions t+d-l of the next window.
    Successors next = [dist, l](std::uint64_t t, std::vector<std::uint64_t>& out) {
        std::uint64_t forbidden = 0;
        for (std::uint64_t m = t; m; m &= m - 1) {
            int p = std::countr_zero(m);
            for (int d : dist) {
                int q = p + d - l;
                if (q >= 0 && q < l) forbidden |= 1ULL << q;
            }
        }
        enumerate_independent(dist, l, forbidden, out);
    };
    return assemble(ProblemKind::independence(), l, std::move(states), std::size_t{1} << l, next,
                    [](std::uint64_t t) { return static_cast<std::int64_t>(std::popcount(t)); }, limits);
}

StateGraph build_domination(const DistanceSet& s, const StateGraphLimits& limits) {
    const int m = static_cast<int>(s.max_element());
    if (m > limits.domination_max_s || m > 15) {
        throw ResourceError("domination state graph needs 2^" + std::to_string(2 * m) +
                            " states; cap is max(S) <= " + std::to_string(limits.domination_max_s));
    }
    const int l = 2 * m;
    std::vector<std::uint64_t> states(std::size_t{1} << l);
    for (std::size_t i = 0; i < states.size(); ++i) states[i] = i;
    std::vector<int> dist(s.begin(), s.end());
    // Positions m+1..3m of the joined 4m-window must each be in Y or adjacent to it.
    const std::uint64_t middle = low_bits(3 * m) & ~low_bits(m);
    const std::uint64_t full = low_bits(2 * l);
    Successors next = [dist, l, middle, full](std::uint64_t t, std::vector<std::uint64_t>& out) {
        for (std::uint64_t t2 = 0; t2 < (1ULL << l); ++t2) {
            std::uint64_t y = t | (t2 << l);
            std::uint64_t dom = y;
            for (int d : dist) dom |= ((y << d) & full) | (y >> d);
            if ((dom & middle) == middle) out.push_back(t2);
        }
    };
    const std::size_t space = states.size();
    return assemble(ProblemKind::domination(), l, std::move(states), space, next,
                    [](std::uint64_t t) { return static_cast<std::int64_t>(std::popcount(t)); }, limits);
}

StateGraph build_identifying(const DistanceSet& s, const StateGraphLimits& limits) {
    const int m = static_cast<int>(s.max_element());
    const int l = 6 * m;
    if (l > limits.identifying_max_window || l > 30) {
        throw ResourceError("identifying-code state graph needs 2^" + std::to_string(l) +
                            " states; cap is window <= " + std::to_string(limits.identifying_max_window));
    }
    std::vector<std::uint64_t> states(std::size_t{1} << l);
    for (std::size_t i = 0; i < states.size(); ++i) states[i] = i;
    // Closed neighborhoods of positions m+1..11m inside the joined 12m-window (0-based bits).
    std::vector<std::uint64_t> nbhd(static_cast<std::size_t>(2 * l + 1), 0);
    for (int u = m + 1; u <= 11 * m; ++u) {
        std::uint64_t mask = 1ULL << (u - 1);
        for (auto d : s) {
            mask |= 1ULL << (u - 1 + d);
            mask |= 1ULL << (u - 1 - d);
        }
        nbhd[static_cast<std::size_t>(u)] = mask;
    }
    Successors next = [nbhd, m, l](std::uint64_t t, std::vector<std::uint64_t>& out) {
        std::uint64_t code[128];
        for (std::uint64_t t2 = 0; t2 < (1ULL << l); ++t2) {
            std::uint64_t y = t | (t2 << l);
            for (int u = m + 1; u <= 11 * m; ++u) code[u] = y & nbhd[static_cast<std::size_t>(u)];
            bool ok = true;
            for (int u = 3 * m + 1; u <= 9 * m && ok; ++u) {
                if (code[u] == 0) {
                    ok = false;
                    break;
                }
                // Vertices further than 2m apart have disjoint neighborhoods.
                for (int v = u - 2 * m; v <= u + 2 * m; ++v) {
                    if (v != u && code[v] == code[u]) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) out.push_back(t2);
        }
    };
    const std::size_t space = states.size();
    return assemble(ProblemKind::identifying_code(), l, std::move(states), space, next,
                    [](std::uint64_t t) { return static_cast<std::int64_t>(std::popcount(t)); }, limits);
}

std::vector<int> decode_colors(std::uint64_t code, int k, int len) {
    std::vector<int> c(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(k));
        code /= static_cast<std::uint64_t>(k);
    }
    return c;
}

StateGraph build_coloring(const DistanceSet& s, int k, const StateGraphLimits& limits) {
    if (k < 1) throw std::invalid_argument("number of colors must be positive");
    const int l = static_cast<int>(s.max_element());
    std::uint64_t space = checked_pow(static_cast<std::uint64_t>(k), l, limits.coloring_max_states);
    if (space > limits.coloring_max_states) {
        throw ResourceError("coloring state graph needs " + std::to_string(k) + "^" + std::to_string(l) +
                            " states; cap is " + std::to_string(limits.coloring_max_states));
    }
    std::vector<int> dist(s.begin(), s.end());
    // Extend a fixed prefix of colors by `len` positions, each differing from colors at distances in S.
    auto extend = [dist, k](std::vector<int>& seq, std::size_t from, int len, std::vector<std::uint64_t>& out) {
        std::function<void(std::size_t)> rec = [&](std::size_t p) {
            if (p == from + static_cast<std::size_t>(len)) {
                std::uint64_t code = 0;
                for (std::size_t i = p; i-- > from;) code = code * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(seq[i]);
                out.push_back(code);
                return;
            }
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int d : dist)
                    if (p >= static_cast<std::size_t>(d) && seq[p - static_cast<std::size_t>(d)] == c) ok = false;
                if (!ok) continue;
                seq[p] = c;
                rec(p + 1);
            }
        };
        rec(from);
    };
    std::vector<std::uint64_t> states;
    {
        std::vector<int> seq(static_cast<std::size_t>(l));
        extend(seq, 0, l, states);
        std::sort(states.begin(), states.end());
    }
    Successors next = [extend, k, l](std::uint64_t t, std::vector<std::uint64_t>& out) {
        std::vector<int> seq = decode_colors(t, k, l);
        seq.resize(static_cast<std::size_t>(2 * l));
        extend(seq, static_cast<std::size_t>(l), l, out);
    };
    return assemble(ProblemKind::coloring(k), l, std::move(states), static_cast<std::size_t>(space), next,
                    [](std::uint64_t) { return std::int64_t{0}; }, limits);
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

}  // namespace

StateGraph build_state_graph(const DistanceSet& s, ProblemKind kind, const StateGraphLimits& limits) {
    switch (kind.tag) {
        case ProblemKind::Tag::independence: return build_independence(s, limits);
        case ProblemKind::Tag::domination: return build_domination(s, limits);
        case ProblemKind::Tag::identifying_code: return build_identifying(s, limits);
        case ProblemKind::Tag::coloring: return build_coloring(s, kind.colors, limits);
    }
    throw std::invalid_argument("unknown problem kind");
}

std::vector<std::int64_t> witness_positions(const CycleWitness& w) {
    std::vector<std::int64_t> pos;
    for (std::size_t j = 0; j < w.states.size(); ++j)
        for (std::uint64_t m = w.states[j]; m; m &= m - 1)
            pos.push_back(static_cast<std::int64_t>(j) * w.window + std::countr_zero(m));
    return pos;
}

CycleWitness extremal_mean_cycle(const StateGraph& g, Direction dir, MeanCycleAlgorithm algo) {
    if (g.states.empty()) throw std::invalid_argument("state graph is empty after pruning");
    MeanCycle c = dir == Direction::max ? max_mean_cycle(g.graph, algo) : min_mean_cycle(g.graph, algo);
    CycleWitness w;
    w.window = g.window;
    for (auto v : c.cycle) w.states.push_back(g.states[v]);
    const auto len = static_cast<std::int64_t>(c.cycle.size());
    w.period = len * g.window;
    w.density = Rational(c.weight_sum, w.period);
    if (g.kind.is_subset_kind()) {
        auto pos = witness_positions(w);
        if (!pos.empty()) w.period_set = blocks_from_positions(pos, w.period);
    } else {
        for (auto code : w.states) {
            auto part = decode_colors(code, g.kind.colors, g.window);
            w.colors.insert(w.colors.end(), part.begin(), part.end());
        }
    }
    return w;
}

std::pair<Rational, BlockList> independence_ratio_exact(const DistanceSet& s, const StateGraphLimits& limits) {
    auto g = build_state_graph(s, ProblemKind::independence(), limits);
    auto w = extremal_mean_cycle(g, Direction::max);
    if (!w.period_set) throw std::logic_error("independence witness is empty");
    BlockList bl = primitive_period(*w.period_set);
    if (verify_periodic_independent(bl, s) || block_density(bl) != w.density) {
        throw std::logic_error("independence witness failed verification for " + s.brace_str());
    }
    return {w.density, bl};
}

std::pair<Rational, CycleWitness> min_dominating_density(const DistanceSet& s, const StateGraphLimits& limits) {
    auto g = build_state_graph(s, ProblemKind::domination(), limits);
    auto w = extremal_mean_cycle(g, Direction::min);
    if (!periodic_dominating(witness_positions(w), w.period, s)) {
        throw std::logic_error("dominating witness failed verification for " + s.brace_str());
    }
    return {w.density, w};
}

std::pair<Rational, CycleWitness> min_identifying_density(const DistanceSet& s, int r, const StateGraphLimits& limits) {
    if (r < 1) throw std::invalid_argument("radius must be at least 1");
    DistanceSet power = r == 1 ? s : power_distance_set(s, r);
    auto g = build_state_graph(power, ProblemKind::identifying_code(), limits);
    auto w = extremal_mean_cycle(g, Direction::min);
    if (!periodic_identifying(witness_positions(w), w.period, power)) {
        throw std::logic_error("identifying witness failed verification for " + s.brace_str());
    }
    return {w.density, w};
}

std::optional<CycleWitness> periodic_coloring(const DistanceSet& s, int k, const StateGraphLimits& limits) {
    auto g = build_state_graph(s, ProblemKind::coloring(k), limits);
    if (g.states.empty()) return std::nullopt;
    // Every retained state has a successor, so following first successors closes a cycle.
    std::map<std::uint32_t, std::size_t> seen;
    std::vector<std::uint32_t> walk;
    std::uint32_t v = 0;
    while (!seen.count(v)) {
        seen[v] = walk.size();
        walk.push_back(v);
        v = g.graph.successors(v)[0];
    }
    CycleWitness w;
    w.window = g.window;
    for (std::size_t j = seen[v]; j < walk.size(); ++j) {
        w.states.push_back(g.states[walk[j]]);
        auto part = decode_colors(g.states[walk[j]], k, g.window);
        w.colors.insert(w.colors.end(), part.begin(), part.end());
    }
    w.period = static_cast<std::int64_t>(w.colors.size());
    w.density = Rational(0);
    if (!periodic_proper_coloring(w.colors, s)) {
        throw std::logic_error("coloring witness failed verification for " + s.brace_str());
    }
    return w;
}

bool periodic_dominating(const std::vector<std::int64_t>& positions, std::int64_t period, const DistanceSet& s) {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(period), 0);
    for (auto p : positions) in[static_cast<std::size_t>(mod(p, period))] = 1;
    for (std::int64_t x = 0; x < period; ++x) {
        bool ok = in[static_cast<std::size_t>(x)];
        for (auto d : s) {
            ok = ok || in[static_cast<std::size_t>(mod(x + d, period))] || in[static_cast<std::size_t>(mod(x - d, period))];
        }
        if (!ok) return false;
    }
    return true;
}

bool periodic_identifying(const std::vector<std::int64_t>& positions, std::int64_t period, const DistanceSet& s) {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(period), 0);
    for (auto p : positions) in[static_cast<std::size_t>(mod(p, period))] = 1;
    // Codes are compared as sets of integers, not residues, so short periods are handled exactly.
    auto code = [&](std::int64_t u) {
        std::vector<std::int64_t> c;
        auto add = [&](std::int64_t y) {
            if (in[static_cast<std::size_t>(mod(y, period))]) c.push_back(y);
        };
        add(u);
        for (auto d : s) {
            add(u + d);
            add(u - d);
        }
        std::sort(c.begin(), c.end());
        return c;
    };
    const std::int64_t reach = 2 * s.max_element();
    for (std::int64_t u = 0; u < period; ++u) {
        auto cu = code(u);
        if (cu.empty()) return false;
        for (std::int64_t v = u - reach; v <= u + reach; ++v)
            if (v != u && code(v) == cu) return false;
    }
    return true;
}

bool periodic_proper_coloring(const std::vector<int>& colors, const DistanceSet& s) {
    const auto p = static_cast<std::int64_t>(colors.size());
    if (p == 0) return false;
    for (std::int64_t x = 0; x < p; ++x)
        for (auto d : s)
            if (colors[static_cast<std::size_t>(x)] == colors[static_cast<std::size_t>(mod(x + d, p))]) return false;
    return true;
}

}  // namespace dgratio
