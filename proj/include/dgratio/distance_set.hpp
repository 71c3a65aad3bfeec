#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dgratio {

/// Finite set of positive integer distances, stored strictly increasing.
class DistanceSet {
public:
    /// Sorts and deduplicates; throws std::invalid_argument on an empty set or a non-positive entry.
    explicit DistanceSet(std::vector<std::int64_t> distances);
    DistanceSet(std::initializer_list<std::int64_t> distances)
        : DistanceSet(std::vector<std::int64_t>(distances)) {}

    std::span<const std::int64_t> values() const noexcept { return d_; }
    std::size_t size() const noexcept { return d_.size(); }
    std::int64_t max_element() const noexcept { return d_.back(); }
    bool contains(std::int64_t x) const;

    /// Every element multiplied by `factor`.
    DistanceSet scaled(std::int64_t factor) const;

    /// Comma-separated form, e.g. "1,4,7".
    std::string str() const;
    /// Brace form, e.g. "{1,4,7}".
    std::string brace_str() const;

    auto begin() const noexcept { return d_.begin(); }
    auto end() const noexcept { return d_.end(); }

    friend bool operator==(const DistanceSet&, const DistanceSet&) = default;
    friend auto operator<=>(const DistanceSet&, const DistanceSet&) = default;

private:
    std::vector<std::int64_t> d_;
};

/// Parses the CLI form "1,4,7". Throws ParseError with the byte offset of the problem.
DistanceSet parse_distance_set(const std::string& text);

struct NormalizedSet {
    DistanceSet reduced;
    std::int64_t divisor;
    bool all_odd;
};

/// Divides out gcd(S) and flags the all-odd case (whose independence ratio is 1/2).
NormalizedSet normalize(const DistanceSet& s);

/// Distance set of the r-th power G(S)^r: positive values of signed sums of at most r generators.
DistanceSet power_distance_set(const DistanceSet& s, int r);

/// True if `sub` is a subset of `super`.
bool is_subset(const DistanceSet& sub, const DistanceSet& super);

}  // namespace dgratio
