#include "dgratio/distance_set.hpp"

#include "dgratio/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dgratio {

DistanceSet::DistanceSet(std::vector<std::int64_t> distances) : d_(std::move(distances)) {
    if (d_.empty()) {
        throw std::invalid_argument("distance set must be nonempty");
    }
    std::sort(d_.begin(), d_.end());
    d_.erase(std::unique(d_.begin(), d_.end()), d_.end());
    if (d_.front() < 1) {
        throw std::invalid_argument("distances must be positive");
    }
}

bool DistanceSet::contains(std::int64_t x) const { return std::binary_search(d_.begin(), d_.end(), x); }

DistanceSet DistanceSet::scaled(std::int64_t factor) const {
    std::vector<std::int64_t> out;
    out.reserve(d_.size());
    for (auto v : d_) out.push_back(v * factor);
    return DistanceSet(std::move(out));
}

std::string DistanceSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d_[i]);
    }
    return out;
}

std::string DistanceSet::brace_str() const { return "{" + str() + "}"; }

DistanceSet parse_distance_set(const std::string& text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    if (text.empty()) {
        throw ParseError("empty distance set", 0);
    }
    while (true) {
        std::size_t start = pos;
        std::int64_t v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            if (v > (INT64_MAX - 9) / 10) throw ParseError("distance too large", start);
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw ParseError("expected a positive integer", pos);
        if (v == 0) throw ParseError("distance must be positive", start);
        values.push_back(v);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    std::vector<std::int64_t> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError("duplicate distance", 0);
    }
    return DistanceSet(std::move(values));
}

NormalizedSet normalize(const DistanceSet& s) {
    std::int64_t g = 0;
    for (auto v : s) g = std::gcd(g, v);
    std::vector<std::int64_t> reduced;
    bool all_odd = true;
    for (auto v : s) {
        reduced.push_back(v / g);
        if ((v / g) % 2 == 0) all_odd = false;
    }
    return NormalizedSet{DistanceSet(std::move(reduced)), g, all_odd};
}

DistanceSet power_distance_set(const DistanceSet& s, int r) {
    if (r < 1) {
        throw std::invalid_argument("power must be at least 1");
    }
    // Reachable signed sums after t steps, t = 1..r.
    std::set<std::int64_t> frontier{0};
    std::set<std::int64_t> positives;
    for (int t = 1; t <= r; ++t) {
        std::set<std::int64_t> next;
        for (auto x : frontier) {
            for (auto d : s) {
                next.insert(x + d);
                next.insert(x - d);
            }
        }
        for (auto x : next) {
            if (x > 0) positives.insert(x);
        }
        frontier = std::move(next);
    }
    return DistanceSet(std::vector<std::int64_t>(positives.begin(), positives.end()));
}

bool is_subset(const DistanceSet& sub, const DistanceSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace dgratio
