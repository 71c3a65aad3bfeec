#include "dgratio/registry.hpp"

#include "dgratio/parallel.hpp"
#include "families.hpp"

#include <stdexcept>

namespace dgratio {

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::theorem: return "theorem";
        case FamilyKind::conjecture: return "conjecture";
        case FamilyKind::lower_bound: return "lower_bound";
        case FamilyKind::upper_bound: return "upper_bound";
        case FamilyKind::limit: return "limit";
    }
    return "?";
}

std::string to_string(Agreement a) {
    switch (a) {
        case Agreement::match: return "match";
        case Agreement::mismatch: return "mismatch";
        case Agreement::unresolved: return "unresolved";
    }
    return "?";
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::failure: return "failure";
        case Outcome::finding: return "finding";
        case Outcome::unresolved: return "unresolved";
    }
    return "?";
}

const std::vector<FamilyDescriptor>& list_families() {
    static const std::vector<FamilyDescriptor> families = detail::build_families();
    return families;
}

const FamilyDescriptor& find_family(const std::string& id) {
    for (const auto& f : list_families())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown family id '" + id + "'");
}

std::optional<Rational> predict(const FamilyDescriptor& f, const Params& p) {
    if (!f.has_value() || !f.in_domain(p)) return std::nullopt;
    return f.value_rule(p);
}

std::string format_params(const FamilyDescriptor& f, const Params& p) {
    std::string out;
    for (std::size_t j = 0; j < p.size() && j < f.params.size(); ++j) {
        if (j) out += ',';
        out += f.params[j].name + "=" + std::to_string(p[j]);
    }
    return out;
}

namespace {

int precedence(FamilyKind k) {
    switch (k) {
        case FamilyKind::theorem: return 0;
        case FamilyKind::conjecture: return 1;
        case FamilyKind::lower_bound:
        case FamilyKind::upper_bound: return 2;
        case FamilyKind::limit: return 3;
    }
    return 3;
}

}  // namespace

std::optional<ClosedForm> closed_form(const DistanceSet& s) {
    const DistanceSet reduced = normalize(s).reduced;
    for (int rank = 0; rank <= 2; ++rank) {
        for (const auto& f : list_families()) {
            if (precedence(f.kind) != rank || !f.match) continue;
            auto p = f.match(reduced);
            if (!p) continue;
            auto value = predict(f, *p);
            if (value) return ClosedForm{f.id, f.kind, *p, reduced, *value};
        }
    }
    return std::nullopt;
}

std::optional<WitnessCheck> check_witness(const FamilyDescriptor& f, const Params& p) {
    if (!f.witness_builder || !f.in_domain(p)) return std::nullopt;
    auto bs = f.witness_builder(p);
    if (!bs || bs->items.empty()) return std::nullopt;
    WitnessCheck w;
    w.notation = render(*bs);
    BlockList bl = expand_blocks(*bs);
    w.density = block_density(bl);
    w.violation = verify_periodic_independent(bl, f.set_builder(p));
    w.independent = !w.violation.has_value();
    return w;
}

FormulaVerdict judge(const FamilyDescriptor& f, const Params& p, const RatioReport& report) {
    FormulaVerdict v(f.set_builder(p));
    v.family = f.id;
    v.kind = f.kind;
    v.params = p;
    v.computed_status = report.status;
    v.computed = report.value;
    v.lower = report.value ? *report.value : report.lower;
    v.upper = report.value ? *report.value : report.upper;
    v.witness = check_witness(f, p);

    std::vector<std::string> problems;
    bool unresolved = false;
    // Claim "value >= x": settled by the lower end, refuted by the upper end.
    auto at_least = [&](const Rational& x, const std::string& what) {
        if (v.lower >= x) return;
        if (v.upper < x) problems.push_back(what + " violated");
        else unresolved = true;
    };
    auto at_most = [&](const Rational& x, const std::string& what) {
        if (v.upper <= x) return;
        if (v.lower > x) problems.push_back(what + " violated");
        else unresolved = true;
    };
    auto below = [&](const Rational& x, const std::string& what) {
        if (v.upper < x) return;
        if (v.lower >= x) problems.push_back(what + " violated");
        else unresolved = true;
    };

    if (f.kind == FamilyKind::limit) {
        const Rational limit = f.limit_rule(p);
        v.predicted = v.witness ? v.witness->density : Rational(0);
        if (v.witness) at_least(v.predicted, "witness lower bound " + v.predicted.fraction_str());
        at_most(limit, "limit upper bound " + limit.fraction_str());
    } else {
        v.predicted = f.value_rule(p);
        switch (f.kind) {
            case FamilyKind::lower_bound: at_least(v.predicted, "lower bound " + v.predicted.fraction_str()); break;
            case FamilyKind::upper_bound: at_most(v.predicted, "upper bound " + v.predicted.fraction_str()); break;
            default:
                at_least(v.predicted, "value " + v.predicted.fraction_str());
                at_most(v.predicted, "value " + v.predicted.fraction_str());
                break;
        }
        if (f.strict_upper) below(*f.strict_upper, "strict upper bound " + f.strict_upper->fraction_str());
    }

    if (v.computed) v.agreement = *v.computed == v.predicted ? Agreement::match : Agreement::mismatch;
    else if (v.predicted < v.lower || v.predicted > v.upper) v.agreement = Agreement::mismatch;

    if (v.witness) {
        if (!v.witness->independent) {
            const auto& bad = *v.witness->violation;
            problems.push_back("witness " + v.witness->notation + " not independent (" + std::to_string(bad.first) +
                               " and " + std::to_string(bad.second) + " at distance " +
                               std::to_string(bad.distance) + ")");
        } else if (f.kind != FamilyKind::upper_bound && f.kind != FamilyKind::limit &&
                   v.witness->density != v.predicted) {
            problems.push_back("witness " + v.witness->notation + " has density " +
                               v.witness->density.fraction_str());
        }
    }

    if (!problems.empty()) {
        const bool soft = f.kind == FamilyKind::conjecture || f.findings_only;
        v.outcome = soft ? Outcome::finding : Outcome::failure;
        for (std::size_t j = 0; j < problems.size(); ++j) v.detail += (j ? "; " : "") + problems[j];
    } else if (unresolved) {
        v.outcome = Outcome::unresolved;
        v.detail = "bounds [" + v.lower.fraction_str() + ", " + v.upper.fraction_str() + "] do not decide";
    } else {
        v.outcome = Outcome::pass;
    }
    return v;
}

std::vector<FormulaVerdict> verify_family(const std::string& id, std::int64_t lo, std::int64_t hi,
                                          const VerifyOptions& options) {
    const FamilyDescriptor& f = find_family(id);
    const auto pts = f.points(lo, hi);
    ComputeOptions co = options.compute;
    const unsigned outer = resolve_threads(options.threads);
    if (outer > 1) co.limits.threads = 1;
    std::vector<std::optional<FormulaVerdict>> slots(pts.size());
    parallel_for(pts.size(), outer, [&](std::size_t j) {
        RatioReport r = compute(f.set_builder(pts[j]), co);
        slots[j] = judge(f, pts[j], r);
    });
    std::vector<FormulaVerdict> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

nlohmann::json catalog_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : list_families()) {
        nlohmann::json params = nlohmann::json::array();
        for (const auto& p : f.params) params.push_back({{"name", p.name}, {"min", p.min}});
        arr.push_back({{"id", f.id},
                       {"kind", to_string(f.kind)},
                       {"set", f.set_text},
                       {"params", params},
                       {"domain", f.domain},
                       {"anchor", f.anchor},
                       {"witness", static_cast<bool>(f.witness_builder)},
                       {"findings_only", f.findings_only}});
    }
    return arr;
}

}  // namespace dgratio
