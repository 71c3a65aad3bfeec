#include "dgratio/blocks.hpp"

#include "dgratio/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dgratio {

BlockStructure& BlockStructure::lit(std::int64_t size) {
    items.emplace_back(BlockLiteral{size});
    return *this;
}

BlockStructure& BlockStructure::lit_pow(std::int64_t size, std::int64_t exponent) {
    if (exponent == 1) return lit(size);
    if (exponent > 1) {
        BlockStructure body;
        body.lit(size);
        items.emplace_back(BlockPower{std::make_shared<const BlockStructure>(std::move(body)), exponent});
    }
    return *this;
}

BlockStructure& BlockStructure::group_pow(BlockStructure body, std::int64_t exponent) {
    if (exponent >= 1 && !body.items.empty()) {
        items.emplace_back(BlockPower{std::make_shared<const BlockStructure>(std::move(body)), exponent});
    }
    return *this;
}

BlockStructure& BlockStructure::append(const BlockStructure& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
    return *this;
}

std::int64_t BlockList::period() const {
    std::int64_t p = 0;
    for (auto s : sizes) p += s;
    return p;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : t_(text) {}

    BlockStructure parse() {
        skip_ws();
        if (pos_ == t_.size()) throw ParseError("empty block structure", pos_);
        BlockStructure bs = structure();
        skip_ws();
        if (pos_ != t_.size()) {
            if (t_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
            throw ParseError("unexpected character", pos_);
        }
        return bs;
    }

private:
    const std::string& t_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < t_.size() && (t_[pos_] == ' ' || t_[pos_] == '\t')) ++pos_;
    }

    bool at_digit() const { return pos_ < t_.size() && t_[pos_] >= '0' && t_[pos_] <= '9'; }

    std::int64_t integer(const char* what) {
        std::size_t start = pos_;
        if (!at_digit()) throw ParseError(std::string("expected ") + what, pos_);
        if (t_[pos_] == '0') throw ParseError(std::string(what) + " must be positive without leading zeros", start);
        std::int64_t v = 0;
        while (at_digit()) {
            if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
                throw ParseError(std::string(what) + " too large", start);
            }
            v = v * 10 + (t_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::optional<std::int64_t> exponent() {
        if (pos_ < t_.size() && t_[pos_] == '^') {
            ++pos_;
            return integer("exponent");
        }
        return std::nullopt;
    }

    BlockStructure structure() {
        BlockStructure bs;
        while (true) {
            skip_ws();
            if (pos_ == t_.size() || t_[pos_] == ')') break;
            term(bs);
        }
        return bs;
    }

    void term(BlockStructure& out) {
        if (t_[pos_] == '(') {
            std::size_t open = pos_;
            ++pos_;
            BlockStructure body = structure();
            if (pos_ == t_.size()) throw ParseError("unbalanced '('", open);
            if (body.items.empty()) throw ParseError("empty group", open);
            ++pos_;  // ')'
            auto e = exponent().value_or(1);
            out.items.emplace_back(BlockPower{std::make_shared<const BlockStructure>(std::move(body)), e});
            return;
        }
        std::int64_t size = integer("block size");
        auto e = exponent();
        if (!e) {
            out.lit(size);
        } else {
            BlockStructure body;
            body.lit(size);
            out.items.emplace_back(BlockPower{std::make_shared<const BlockStructure>(std::move(body)), *e});
        }
    }
};

std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
    return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) {
    return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

std::size_t expanded_count(const BlockStructure& bs) {
    std::size_t n = 0;
    for (const auto& node : bs.items) {
        if (std::holds_alternative<BlockLiteral>(node)) {
            n = sat_add(n, 1);
        } else {
            const auto& p = std::get<BlockPower>(node);
            n = sat_add(n, sat_mul(expanded_count(*p.body), static_cast<std::size_t>(p.exponent)));
        }
    }
    return n;
}

void expand_into(const BlockStructure& bs, std::vector<std::int64_t>& out) {
    for (const auto& node : bs.items) {
        if (const auto* l = std::get_if<BlockLiteral>(&node)) {
            out.push_back(l->size);
        } else {
            const auto& p = std::get<BlockPower>(node);
            std::size_t start = out.size();
            expand_into(*p.body, out);
            std::size_t len = out.size() - start;
            for (std::int64_t r = 1; r < p.exponent; ++r) {
                for (std::size_t j = 0; j < len; ++j) out.push_back(out[start + j]);
            }
        }
    }
}

void render_into(const BlockStructure& bs, std::string& out) {
    bool first = true;
    for (const auto& node : bs.items) {
        if (!first) out += ' ';
        first = false;
        if (const auto* l = std::get_if<BlockLiteral>(&node)) {
            out += std::to_string(l->size);
            continue;
        }
        const auto& p = std::get<BlockPower>(node);
        const auto& body = p.body->items;
        if (body.size() == 1 && std::holds_alternative<BlockLiteral>(body[0])) {
            out += std::to_string(std::get<BlockLiteral>(body[0]).size);
        } else {
            out += '(';
            render_into(*p.body, out);
            out += ')';
        }
        out += '^';
        out += std::to_string(p.exponent);
    }
}

}  // namespace

BlockStructure parse_block_notation(const std::string& text) { return Parser(text).parse(); }

std::string render(const BlockStructure& bs) {
    std::string out;
    render_into(bs, out);
    return out;
}

BlockList expand_blocks(const BlockStructure& bs, std::size_t cap) {
    std::size_t n = expanded_count(bs);
    if (n > cap) {
        throw ResourceError("block expansion has " +
                            (n == std::numeric_limits<std::size_t>::max() ? std::string("too many") : std::to_string(n)) +
                            " blocks, cap is " + std::to_string(cap));
    }
    BlockList bl;
    bl.sizes.reserve(n);
    expand_into(bs, bl.sizes);
    if (bl.sizes.empty()) throw std::invalid_argument("block structure expands to nothing");
    return bl;
}

Rational block_density(const BlockList& bl) {
    return Rational(static_cast<std::int64_t>(bl.count()), bl.period());
}

std::vector<std::int64_t> block_positions(const BlockList& bl) {
    std::vector<std::int64_t> pos;
    pos.reserve(bl.count());
    std::int64_t p = 0;
    for (auto s : bl.sizes) {
        pos.push_back(p);
        p += s;
    }
    return pos;
}

std::optional<Violation> verify_periodic_independent(const BlockList& bl, const DistanceSet& s) {
    const std::int64_t period = bl.period();
    const std::int64_t reach = s.max_element();
    const std::int64_t copies = (reach + period - 1) / period + 2;
    auto base = block_positions(bl);
    std::vector<std::int64_t> unrolled;
    unrolled.reserve(base.size() * static_cast<std::size_t>(copies));
    for (std::int64_t c = 0; c < copies; ++c) {
        for (auto p : base) unrolled.push_back(p + c * period);
    }
    // Every pair of the infinite set is a translate of one whose first element lies in period 0.
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i + 1; j < unrolled.size(); ++j) {
            std::int64_t d = unrolled[j] - unrolled[i];
            if (d > reach) break;
            if (s.contains(d)) return Violation{unrolled[i], unrolled[j], d};
        }
    }
    return std::nullopt;
}

BlockList blocks_from_positions(std::vector<std::int64_t> positions, std::int64_t period) {
    if (positions.empty()) throw std::invalid_argument("periodic set has no elements");
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    if (positions.front() < 0 || positions.back() >= period) {
        throw std::invalid_argument("position outside the period");
    }
    BlockList bl;
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) bl.sizes.push_back(positions[i + 1] - positions[i]);
    bl.sizes.push_back(period - positions.back() + positions.front());
    return bl;
}

BlockList primitive_period(const BlockList& bl) {
    const std::size_t n = bl.count();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t j = d; j < n && ok; ++j) ok = bl.sizes[j] == bl.sizes[j - d];
        if (ok) return BlockList{std::vector<std::int64_t>(bl.sizes.begin(), bl.sizes.begin() + static_cast<std::ptrdiff_t>(d))};
    }
    return bl;
}

std::string render_run_length(const BlockList& bl) {
    std::string out;
    for (std::size_t i = 0; i < bl.sizes.size();) {
        std::size_t j = i;
        while (j < bl.sizes.size() && bl.sizes[j] == bl.sizes[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(bl.sizes[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace dgratio
