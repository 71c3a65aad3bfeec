#include "dgratio/mean_cycle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace dgratio {

namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;

// Best simple cycle among those obtained by cutting a walk at repeated vertices.
std::optional<MeanCycle> best_cycle_on_walk(const Digraph& g, const std::vector<std::uint32_t>& walk) {
    std::optional<MeanCycle> best;
    std::vector<std::int64_t> seen(g.vertices(), -1);
    std::vector<std::uint32_t> stack;
    for (auto v : walk) {
        if (seen[v] >= 0) {
            MeanCycle c;
            auto start = static_cast<std::size_t>(seen[v]);
            c.cycle.assign(stack.begin() + static_cast<std::ptrdiff_t>(start), stack.end());
            for (auto x : c.cycle) c.weight_sum += g.weight[x];
            if (!best || c.mean() > best->mean()) best = c;
            for (std::size_t j = start; j < stack.size(); ++j) seen[stack[j]] = -1;
            stack.resize(start);
        }
        seen[v] = static_cast<std::int64_t>(stack.size());
        stack.push_back(v);
    }
    return best;
}

MeanCycle karp(const Digraph& g) {
    const std::size_t n = g.vertices();
    // d[k*n+v]: heaviest walk with exactly k arcs ending at v, from any start.
    std::vector<std::int64_t> d((n + 1) * n, kNegInf);
    std::vector<std::uint32_t> pred((n + 1) * n, 0);
    std::fill(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n), 0);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::int64_t* prev = &d[(k - 1) * n];
        std::int64_t* cur = &d[k * n];
        std::uint32_t* pk = &pred[k * n];
        for (std::size_t u = 0; u < n; ++u) {
            if (prev[u] == kNegInf) continue;
            std::int64_t val = prev[u] + g.weight[u];
            for (auto v : g.successors(u)) {
                if (val > cur[v]) {
                    cur[v] = val;
                    pk[v] = static_cast<std::uint32_t>(u);
                }
            }
        }
    }
    std::optional<Rational> best;
    std::size_t best_v = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (d[n * n + v] == kNegInf) continue;
        std::optional<Rational> worst;
        for (std::size_t k = 0; k < n; ++k) {
            if (d[k * n + v] == kNegInf) continue;
            Rational r(d[n * n + v] - d[k * n + v], static_cast<std::int64_t>(n - k));
            if (!worst || r < *worst) worst = r;
        }
        if (worst && (!best || *worst > *best)) {
            best = worst;
            best_v = v;
        }
    }
    if (!best) throw std::invalid_argument("graph has no cycle");
    std::vector<std::uint32_t> walk(n + 1);
    auto v = static_cast<std::uint32_t>(best_v);
    for (std::size_t k = n + 1; k-- > 0;) {
        walk[k] = v;
        if (k > 0) v = pred[k * n + v];
    }
    auto cyc = best_cycle_on_walk(g, walk);
    if (!cyc || cyc->mean() != *best) throw std::logic_error("mean cycle recovery failed");
    return *cyc;
}

// Gain p/q in lowest terms; q divides the length of a policy cycle.
struct Gain {
    std::int64_t p = 0;
    std::int64_t q = 1;
    friend bool operator==(const Gain&, const Gain&) = default;
};

int cmp(const Gain& a, const Gain& b) {
    __int128 l = static_cast<__int128>(a.p) * b.q;
    __int128 r = static_cast<__int128>(b.p) * a.q;
    return l < r ? -1 : (l > r ? 1 : 0);
}

// Exact policy iteration. Bias is stored multiplied by the gain's denominator, so
// biases of vertices sharing a gain are directly comparable integers.
MeanCycle howard(const Digraph& g) {
    const std::size_t n = g.vertices();
    std::vector<std::uint32_t> policy(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto s = g.successors(v);
        if (s.empty()) throw std::invalid_argument("every vertex needs a successor");
        std::uint32_t pick = s[0];
        for (auto u : s)
            if (g.weight[u] > g.weight[pick]) pick = u;
        policy[v] = pick;
    }
    std::vector<Gain> gain(n);
    std::vector<__int128> bias(n);
    std::vector<std::uint8_t> state(n);
    std::vector<std::uint32_t> path;
    std::vector<std::uint32_t> ring;

    auto evaluate = [&] {
        std::fill(state.begin(), state.end(), 0);  // 0 unseen, 1 on current path, 2 evaluated
        for (std::size_t s0 = 0; s0 < n; ++s0) {
            if (state[s0]) continue;
            path.clear();
            auto v = static_cast<std::uint32_t>(s0);
            while (state[v] == 0) {
                state[v] = 1;
                path.push_back(v);
                v = policy[v];
            }
            std::size_t tail_end = path.size();
            if (state[v] == 1) {
                auto start = static_cast<std::size_t>(std::find(path.begin(), path.end(), v) - path.begin());
                std::int64_t sum = 0;
                auto len = static_cast<std::int64_t>(path.size() - start);
                std::uint32_t root = v;
                for (std::size_t j = start; j < path.size(); ++j) {
                    sum += g.weight[path[j]];
                    root = std::min(root, path[j]);
                }
                std::int64_t gd = std::gcd(sum, len);
                Gain gc{sum / gd, len / gd};
                ring.clear();
                std::uint32_t x = root;
                do {
                    ring.push_back(x);
                    x = policy[x];
                } while (x != root);
                gain[root] = gc;
                bias[root] = 0;
                state[root] = 2;
                for (std::size_t j = ring.size(); j-- > 1;) {
                    std::uint32_t y = ring[j];
                    gain[y] = gc;
                    bias[y] = static_cast<__int128>(gc.q) * g.weight[y] - gc.p + bias[policy[y]];
                    state[y] = 2;
                }
                tail_end = start;
            }
            for (std::size_t j = tail_end; j-- > 0;) {
                std::uint32_t y = path[j];
                std::uint32_t nx = policy[y];
                gain[y] = gain[nx];
                bias[y] = static_cast<__int128>(gain[y].q) * g.weight[y] - gain[y].p + bias[nx];
                state[y] = 2;
            }
        }
    };

    for (std::size_t iter = 0;; ++iter) {
        evaluate();
        bool changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            std::uint32_t best = policy[v];
            for (auto u : g.successors(v))
                if (cmp(gain[u], gain[best]) > 0) best = u;
            if (best != policy[v]) {
                policy[v] = best;
                changed = true;
            }
        }
        if (!changed) {
            for (std::size_t v = 0; v < n; ++v) {
                std::uint32_t best = policy[v];
                for (auto u : g.successors(v))
                    if (gain[u] == gain[v] && bias[u] > bias[best]) best = u;
                if (best != policy[v]) {
                    policy[v] = best;
                    changed = true;
                }
            }
        }
        if (!changed) break;
        if (iter > 1'000'000) throw std::logic_error("policy iteration did not converge");
    }

    std::size_t arg = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (cmp(gain[v], gain[arg]) > 0) arg = v;
    std::vector<std::uint32_t> walk;
    std::vector<std::uint8_t> seen(n, 0);
    auto v = static_cast<std::uint32_t>(arg);
    while (!seen[v]) {
        seen[v] = 1;
        walk.push_back(v);
        v = policy[v];
    }
    MeanCycle c;
    c.cycle.assign(std::find(walk.begin(), walk.end(), v), walk.end());
    for (auto x : c.cycle) c.weight_sum += g.weight[x];
    return c;
}

// Drop vertices from which every walk dies; policy iteration needs a successor everywhere.
Digraph trim_sinks(const Digraph& g, std::vector<std::uint32_t>& old_of_new) {
    const std::size_t n = g.vertices();
    std::vector<std::uint64_t> pred_off(n + 1, 0);
    for (auto v : g.targets) ++pred_off[v + 1];
    for (std::size_t v = 0; v < n; ++v) pred_off[v + 1] += pred_off[v];
    std::vector<std::uint32_t> preds(g.arcs());
    {
        auto fill = pred_off;
        for (std::size_t u = 0; u < n; ++u)
            for (auto v : g.successors(u)) preds[fill[v]++] = static_cast<std::uint32_t>(u);
    }
    std::vector<std::size_t> outdeg(n);
    std::vector<std::uint8_t> dead(n, 0);
    std::vector<std::uint32_t> queue;
    for (std::size_t u = 0; u < n; ++u) {
        outdeg[u] = g.successors(u).size();
        if (outdeg[u] == 0) {
            dead[u] = 1;
            queue.push_back(static_cast<std::uint32_t>(u));
        }
    }
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (auto j = pred_off[v]; j < pred_off[v + 1]; ++j) {
            auto u = preds[j];
            if (!dead[u] && --outdeg[u] == 0) {
                dead[u] = 1;
                queue.push_back(u);
            }
        }
    }
    std::vector<std::int64_t> new_of_old(n, -1);
    old_of_new.clear();
    for (std::size_t u = 0; u < n; ++u)
        if (!dead[u]) {
            new_of_old[u] = static_cast<std::int64_t>(old_of_new.size());
            old_of_new.push_back(static_cast<std::uint32_t>(u));
        }
    Digraph h;
    for (auto u : old_of_new) {
        h.weight.push_back(g.weight[u]);
        for (auto v : g.successors(u))
            if (new_of_old[v] >= 0) h.targets.push_back(static_cast<std::uint32_t>(new_of_old[v]));
        h.offsets.push_back(h.targets.size());
    }
    return h;
}

}  // namespace

MeanCycle max_mean_cycle(const Digraph& g, MeanCycleAlgorithm algo) {
    if (g.vertices() == 0) throw std::invalid_argument("graph has no cycle");
    if (algo == MeanCycleAlgorithm::automatic) {
        const double v = static_cast<double>(g.vertices());
        const double e = static_cast<double>(g.arcs());
        algo = (v <= 2048 && v * (v + e) <= 5e8) ? MeanCycleAlgorithm::karp : MeanCycleAlgorithm::howard;
    }
    if (algo == MeanCycleAlgorithm::karp) return karp(g);
    std::vector<std::uint32_t> map;
    Digraph h = trim_sinks(g, map);
    if (h.vertices() == 0) throw std::invalid_argument("graph has no cycle");
    MeanCycle c = howard(h);
    for (auto& x : c.cycle) x = map[x];
    return c;
}

MeanCycle min_mean_cycle(const Digraph& g, MeanCycleAlgorithm algo) {
    Digraph neg = g;
    for (auto& w : neg.weight) w = -w;
    MeanCycle c = max_mean_cycle(neg, algo);
    c.weight_sum = -c.weight_sum;
    return c;
}

}  // namespace dgratio
