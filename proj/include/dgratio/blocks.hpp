#pragma once

#include "dgratio/distance_set.hpp"
#include "dgratio/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dgratio {

inline constexpr std::size_t kDefaultBlockCap = 1'000'000;

struct BlockStructure;

struct BlockLiteral {
    std::int64_t size;
};

struct BlockPower {
    std::shared_ptr<const BlockStructure> body;
    std::int64_t exponent;
};

using BlockNode = std::variant<BlockLiteral, BlockPower>;

/// AST of block notation: juxtaposition concatenates, ^ repeats, parentheses group.
struct BlockStructure {
    std::vector<BlockNode> items;

    // Builders used by the registry.
    BlockStructure& lit(std::int64_t size);
    BlockStructure& lit_pow(std::int64_t size, std::int64_t exponent);
    BlockStructure& group_pow(BlockStructure body, std::int64_t exponent);
    BlockStructure& append(const BlockStructure& other);
};

/// Flat gap sequence of one period of a periodic set.
struct BlockList {
    std::vector<std::int64_t> sizes;

    std::int64_t period() const;
    std::size_t count() const noexcept { return sizes.size(); }
    friend bool operator==(const BlockList&, const BlockList&) = default;
};

BlockStructure parse_block_notation(const std::string& text);

/// Canonical text form; reparses to a structure with the same expansion.
std::string render(const BlockStructure& bs);

BlockList expand_blocks(const BlockStructure& bs, std::size_t cap = kDefaultBlockCap);

Rational block_density(const BlockList& bl);

struct Violation {
    std::int64_t first;
    std::int64_t second;
    std::int64_t distance;
};

/// std::nullopt means the periodic set is independent in G(S).
std::optional<Violation> verify_periodic_independent(const BlockList& bl, const DistanceSet& s);

/// Element positions within one period, starting at 0.
std::vector<std::int64_t> block_positions(const BlockList& bl);

/// Gap list of the periodic set {p + k*period}; positions must lie in [0, period).
BlockList blocks_from_positions(std::vector<std::int64_t> positions, std::int64_t period);

/// Shortest list whose repetition gives the same sequence.
BlockList primitive_period(const BlockList& bl);

/// Run-length notation of a flat list, e.g. [2,2,5] -> "2^2 5".
std::string render_run_length(const BlockList& bl);

}  // namespace dgratio
