#pragma once
// Independent brute-force oracles shared by the test binaries.

#include "dgratio/distance_set.hpp"
#include "dgratio/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

// Maximum independent set of G(S)[n] by exhaustive enumeration of bitmasks.
inline int alpha_interval(const dgratio::DistanceSet& s, int n) {
    int best = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool ok = true;
        for (auto d : s) {
            if (d < n && (m & (m >> d))) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(m));
    }
    return best;
}

// Maximum independent set of the circulant G(n, S) by exhaustive enumeration.
inline int alpha_circulant(const dgratio::DistanceSet& s, int n) {
    int best = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!((m >> i) & 1)) continue;
            for (auto d : s) {
                int j = static_cast<int>((i + d) % n);
                if (j != i && ((m >> j) & 1)) ok = false;
                if (j == i) ok = false;  // loop when n divides d
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(m));
    }
    return best;
}

inline bool member(std::uint32_t mask, int period, long long x) {
    long long r = ((x % period) + period) % period;
    return (mask >> r) & 1;
}

// Minimum density over periodic subsets with period <= max_period satisfying `pred`.
template <class Pred>
std::optional<dgratio::Rational> min_periodic_density(int max_period, Pred pred) {
    std::optional<dgratio::Rational> best;
    for (int p = 1; p <= max_period; ++p)
        for (std::uint32_t m = 1; m < (1u << p); ++m) {
            dgratio::Rational dens(__builtin_popcount(m), p);
            if (best && dens >= *best) continue;
            if (pred(m, p)) best = dens;
        }
    return best;
}

inline bool dominating(const dgratio::DistanceSet& s, std::uint32_t m, int p) {
    for (int x = 0; x < p; ++x) {
        bool ok = member(m, p, x);
        for (auto d : s) ok = ok || member(m, p, x + d) || member(m, p, x - d);
        if (!ok) return false;
    }
    return true;
}

inline bool identifying(const dgratio::DistanceSet& s, std::uint32_t m, int p) {
    auto code = [&](long long u) {
        std::vector<long long> c;
        std::vector<long long> nb{u};
        for (auto d : s) {
            nb.push_back(u - d);
            nb.push_back(u + d);
        }
        std::sort(nb.begin(), nb.end());
        for (auto y : nb)
            if (member(m, p, y)) c.push_back(y);
        return c;
    };
    long long reach = 2 * s.max_element();
    for (long long u = 0; u < p; ++u) {
        auto cu = code(u);
        if (cu.empty()) return false;
        for (long long v = u - reach; v <= u + reach; ++v)
            if (v != u && code(v) == cu) return false;
    }
    return true;
}

}  // namespace oracle
