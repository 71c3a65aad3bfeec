#include "dgratio/search.hpp"

#include "dgratio/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dgratio {

WorkMeter::WorkMeter(WorkBudget budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

void WorkMeter::tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) {
        throw BudgetExceeded("node budget of " + std::to_string(budget_.max_nodes) + " exhausted");
    }
    if (budget_.max_seconds > 0 && (nodes_ & 0xfff) == 0 && elapsed_seconds() > budget_.max_seconds) {
        throw BudgetExceeded("time budget exhausted");
    }
}

double WorkMeter::elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

namespace {

// Branch and bound over vertices 1..i in decreasing order. Vertex v is bit v.
class Branch {
public:
    // lower_nbr(b) must give the neighbors of b with smaller index.
    Branch(int universe, std::vector<std::vector<std::uint64_t>> lower_nbr)
        : words_(static_cast<std::size_t>(universe / 64 + 1)), nbr_(std::move(lower_nbr)) {}

    // Is there an independent set of size alpha[i-1]+1 in [1..i]? Any such set contains i.
    bool grow(int i, const std::vector<int>& alpha, WorkMeter& meter, std::vector<int>& chosen) {
        alpha_ = &alpha;
        meter_ = &meter;
        target_ = alpha[static_cast<std::size_t>(i - 1)] + 1;
        chosen_ = &chosen;
        chosen.assign(1, i);
        if (target_ <= 1) return true;
        stack_.assign(words_ * static_cast<std::size_t>(target_ + 1), 0);
        std::uint64_t* b = stack_.data();
        for (int v = 1; v < i; ++v) b[v >> 6] |= 1ULL << (v & 63);
        for (std::size_t w = 0; w < words_; ++w) b[w] &= ~nbr_[static_cast<std::size_t>(i)][w];
        return dfs(0, 1);
    }

private:
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> nbr_;
    std::vector<std::uint64_t> stack_;
    const std::vector<int>* alpha_ = nullptr;
    WorkMeter* meter_ = nullptr;
    std::vector<int>* chosen_ = nullptr;
    int target_ = 0;

    int highest(const std::uint64_t* b) const {
        for (std::size_t w = words_; w-- > 0;)
            if (b[w]) return static_cast<int>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(b[w])));
        return -1;
    }

    int next_one(const std::uint64_t* b, int p) const {
        auto w = static_cast<std::size_t>(p >> 6);
        if (w >= words_) return -1;
        std::uint64_t x = b[w] & (~0ULL << (p & 63));
        while (!x) {
            if (++w == words_) return -1;
            x = b[w];
        }
        return static_cast<int>(w * 64) + std::countr_zero(x);
    }

    int next_zero(const std::uint64_t* b, int p) const {
        auto w = static_cast<std::size_t>(p >> 6);
        if (w >= words_) return p;
        std::uint64_t x = ~b[w] & (~0ULL << (p & 63));
        while (!x) {
            if (++w == words_) return static_cast<int>(w * 64);
            x = ~b[w];
        }
        return static_cast<int>(w * 64) + std::countr_zero(x);
    }

    // Sum of alpha over the maximal runs of b, stopping once `enough` is reached.
    int beta(const std::uint64_t* b, int enough) const {
        int sum = 0;
        int p = next_one(b, 0);
        while (p >= 0) {
            int q = next_zero(b, p);
            sum += (*alpha_)[static_cast<std::size_t>(q - p)];
            if (sum >= enough) return sum;
            p = next_one(b, q);
        }
        return sum;
    }

    bool dfs(int depth, int a_size) {
        std::uint64_t* b = stack_.data() + static_cast<std::size_t>(depth) * words_;
        std::uint64_t* c = b + words_;
        const int need = target_ - a_size;
        while (true) {
            int v = highest(b);
            if (v < 0) return false;
            if ((*alpha_)[static_cast<std::size_t>(v)] < need) return false;
            if (beta(b, need) < need) return false;
            meter_->tick();
            const auto& nb = nbr_[static_cast<std::size_t>(v)];
            for (std::size_t w = 0; w < words_; ++w) c[w] = b[w] & ~nb[w];
            c[v >> 6] &= (1ULL << (v & 63)) - 1;
            for (std::size_t w = static_cast<std::size_t>(v >> 6) + 1; w < words_; ++w) c[w] = 0;
            chosen_->push_back(v);
            if (need == 1 || dfs(depth + 1, a_size + 1)) return true;
            chosen_->pop_back();
            b[v >> 6] &= ~(1ULL << (v & 63));
        }
    }
};

std::vector<std::vector<std::uint64_t>> interval_neighbors(const DistanceSet& s, int n) {
    const std::size_t words = static_cast<std::size_t>(n / 64 + 1);
    std::vector<std::vector<std::uint64_t>> nbr(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(words, 0));
    for (int b = 1; b <= n; ++b)
        for (auto d : s)
            if (b - d >= 1) nbr[static_cast<std::size_t>(b)][static_cast<std::size_t>((b - d) >> 6)] |= 1ULL << ((b - d) & 63);
    return nbr;
}

std::vector<std::vector<std::uint64_t>> circulant_neighbors(const DistanceSet& s, int n) {
    const std::size_t words = static_cast<std::size_t>(n / 64 + 1);
    std::vector<std::vector<std::uint64_t>> nbr(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(words, 0));
    auto add = [&](int b, std::int64_t u) {
        if (u >= 1 && u < b) nbr[static_cast<std::size_t>(b)][static_cast<std::size_t>(u >> 6)] |= 1ULL << (u & 63);
    };
    for (int b = 1; b <= n; ++b)
        for (auto d : s) {
            add(b, b - d);
            add(b, b + d - n);
        }
    return nbr;
}

}  // namespace

int alpha_interval(const DistanceSet& s, int n, AlphaTable& table, WorkMeter& meter) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (static_cast<int>(table.interval_alpha.size()) > n) return table.interval_alpha[static_cast<std::size_t>(n)];
    if (static_cast<int>(table.interval_alpha.size()) != n) {
        throw std::invalid_argument("alpha table must hold alpha(1..n-1)");
    }
    Branch br(n, interval_neighbors(s, n));
    std::vector<int> chosen;
    bool found = br.grow(n, table.interval_alpha, meter, chosen);
    int prev = table.interval_alpha.back();
    table.interval_alpha.push_back(found ? prev + 1 : prev);
    return table.interval_alpha.back();
}

int alpha_interval(const DistanceSet& s, int n) {
    AlphaTable t;
    WorkMeter meter(WorkBudget{~0ULL, 0});
    int a = 0;
    for (int m = 1; m <= n; ++m) a = alpha_interval(s, m, t, meter);
    return a;
}

CirculantSolution alpha_circulant(const DistanceSet& s, int n, AlphaTable& table, WorkMeter& meter) {
    if (n <= s.max_element()) throw std::invalid_argument("circulant order must exceed max(S)");
    // Prefix tables of a different n say nothing about this one.
    table.prefix_alpha.assign(1, 0);
    table.prefix_n = n;
    Branch br(n, circulant_neighbors(s, n));
    CirculantSolution sol;
    std::vector<int> chosen;
    for (int i = 1; i <= n; ++i) {
        int prev = table.prefix_alpha.back();
        // G(n,S)[1..i] contains G(S)[i], so alpha(n,i) <= alpha(i) when that is known.
        bool capped = static_cast<int>(table.interval_alpha.size()) > i &&
                      table.interval_alpha[static_cast<std::size_t>(i)] == prev;
        bool found = !capped && br.grow(i, table.prefix_alpha, meter, chosen);
        table.prefix_alpha.push_back(found ? prev + 1 : prev);
        if (found) {
            sol.members.clear();
            for (int v : chosen) sol.members.push_back(v - 1);
        }
    }
    sol.alpha = table.prefix_alpha.back();
    std::sort(sol.members.begin(), sol.members.end());
    return sol;
}

int alpha_circulant(const DistanceSet& s, int n) {
    AlphaTable t;
    WorkMeter meter(WorkBudget{~0ULL, 0});
    return alpha_circulant(s, n, t, meter).alpha;
}

int brute_force_alpha_interval(const DistanceSet& s, int n) {
    if (n < 0 || n > 26) throw std::invalid_argument("brute-force oracle is limited to n <= 26");
    int best = 0;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t m = 0; m < limit; ++m) {
        int pc = std::popcount(m);
        if (pc <= best) continue;
        bool ok = true;
        for (auto d : s)
            if (d < n && (m & (m >> d))) {
                ok = false;
                break;
            }
        if (ok) best = pc;
    }
    return best;
}

std::string to_string(RatioStatus s) {
    switch (s) {
        case RatioStatus::exact: return "exact";
        case RatioStatus::bounded: return "bounded";
        case RatioStatus::registry_only: return "registry_only";
    }
    return "?";
}

std::string to_string(RatioMethod m) {
    switch (m) {
        case RatioMethod::stategraph: return "stategraph";
        case RatioMethod::search: return "search";
        case RatioMethod::shortcut: return "shortcut";
    }
    return "?";
}

RatioReport compute_ratio(const DistanceSet& s, WorkBudget budget) {
    RatioReport r{s};
    r.method = RatioMethod::search;
    WorkMeter meter(budget);
    AlphaTable table;
    const std::int64_t smax = s.max_element();
    try {
        for (int n = 1;; ++n) {
            for (int m : {2 * n - 1, 2 * n}) {
                int a = alpha_interval(s, m, table, meter);
                r.work.interval_n = m;
                if (Rational(a, m) < r.upper || r.upper_witness_n == 0) {
                    r.upper = Rational(a, m);
                    r.upper_witness_n = m;
                }
            }
            if (n > smax) {
                auto sol = alpha_circulant(s, n, table, meter);
                r.work.circulant_n = n;
                if (Rational(sol.alpha, n) > r.lower) {
                    r.lower = Rational(sol.alpha, n);
                    r.lower_witness = primitive_period(blocks_from_positions(sol.members, n));
                }
            }
            if (r.lower == r.upper) {
                r.status = RatioStatus::exact;
                r.value = r.lower;
                break;
            }
        }
    } catch (const BudgetExceeded& e) {
        r.status = RatioStatus::bounded;
        r.note = e.what();
    }
    r.work.nodes = meter.nodes();
    r.work.seconds = meter.elapsed_seconds();
    if (r.lower_witness && verify_periodic_independent(*r.lower_witness, s)) {
        throw std::logic_error("circulant witness is not independent for " + s.brace_str());
    }
    return r;
}

}  // namespace dgratio
