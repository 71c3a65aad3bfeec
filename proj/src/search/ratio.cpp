#include "dgratio/ratio.hpp"

#include "dgratio/errors.hpp"

namespace dgratio {

BlockList scale_blocks(const BlockList& bl, std::int64_t d) {
    if (d == 1) return bl;
    BlockList out;
    for (auto b : bl.sizes) {
        for (std::int64_t j = 1; j < d; ++j) out.sizes.push_back(1);
        out.sizes.push_back(d * b - (d - 1));
    }
    return out;
}

RatioReport compute(const DistanceSet& s, const ComputeOptions& options) {
    auto norm = normalize(s);
    const auto& r = norm.reduced;
    RatioReport rep{s};
    auto finish = [&](RatioReport& out) -> RatioReport& {
        out.set = s;
        if (out.lower_witness) out.lower_witness = scale_blocks(*out.lower_witness, norm.divisor);
        if (norm.divisor != 1) {
            std::string scaled = "scaled down by " + std::to_string(norm.divisor);
            out.note = out.note.empty() ? scaled : scaled + "; " + out.note;
        }
        if (out.lower_witness && verify_periodic_independent(*out.lower_witness, s)) {
            throw std::logic_error("witness is not independent for " + s.brace_str());
        }
        return out;
    };

    if (norm.all_odd) {
        rep.method = RatioMethod::shortcut;
        rep.status = RatioStatus::exact;
        rep.value = rep.lower = rep.upper = Rational(1, 2);
        rep.lower_witness = BlockList{{2}};
        rep.note = "all distances odd";
        if (options.method == MethodChoice::search) rep.note += "; search skipped";
        return finish(rep);
    }

    bool try_graph = options.method == MethodChoice::stategraph ||
                     (options.method == MethodChoice::automatic && r.max_element() <= options.limits.independence_max_s);
    if (try_graph) {
        try {
            WorkMeter clock;
            auto g = build_state_graph(r, ProblemKind::independence(), options.limits);
            auto w = extremal_mean_cycle(g, Direction::max);
            if (!w.period_set) throw std::logic_error("empty independence witness");
            rep.method = RatioMethod::stategraph;
            rep.status = RatioStatus::exact;
            rep.value = rep.lower = rep.upper = w.density;
            rep.lower_witness = primitive_period(*w.period_set);
            rep.work.states = g.states.size();
            rep.work.arcs = g.graph.arcs();
            rep.work.seconds = clock.elapsed_seconds();
            return finish(rep);
        } catch (const ResourceError& e) {
            if (options.method == MethodChoice::stategraph) throw;
            rep.note = std::string("state graph skipped: ") + e.what();
        }
    }
    std::string pending = rep.note;
    RatioReport searched = compute_ratio(r, options.budget);
    if (!pending.empty()) searched.note = searched.note.empty() ? pending : pending + "; " + searched.note;
    return finish(searched);
}

Rational fractional_chromatic(const DistanceSet& s, const ComputeOptions& options) {
    auto rep = compute(s, options);
    if (rep.status != RatioStatus::exact || !rep.value) {
        throw InexactError("independence ratio of " + s.brace_str() + " is only known within [" + rep.lower.str() +
                           ", " + rep.upper.str() + "]");
    }
    return rep.value->reciprocal();
}

}  // namespace dgratio
