#include "dgratio/cli.hpp"

#include "dgratio/errors.hpp"
#include "dgratio/parallel.hpp"
#include "dgratio/registry.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dgratio::cli {

namespace {

using nlohmann::json;

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw ParseError("expected A..B in '" + text + "'", 0);
    auto number = [&](std::size_t from, std::size_t to) {
        if (from == to) throw ParseError("missing bound in '" + text + "'", from);
        std::int64_t v = 0;
        for (std::size_t j = from; j < to; ++j) {
            if (text[j] < '0' || text[j] > '9') throw ParseError("bad digit in '" + text + "'", j);
            v = v * 10 + (text[j] - '0');
            if (v > 1'000'000'000) throw ParseError("bound too large in '" + text + "'", j);
        }
        return v;
    };
    Range r{number(0, dots), number(dots + 2, text.size())};
    if (r.lo > r.hi) throw ParseError("empty range '" + text + "'", 0);
    return r;
}

// Accepts "100000000" or "1e8".
std::uint64_t parse_budget(const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError("bad budget '" + text + "'", 0);
    }
    if (used != text.size()) throw ParseError("bad budget '" + text + "'", used);
    if (!(v >= 1) || v > 1e18) throw ParseError("budget out of range '" + text + "'", 0);
    return static_cast<std::uint64_t>(v);
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("DGRATIO_BUDGET"); env && *env) return parse_budget(env);
    return kDefaultNodeBudget;
}

std::string witness_text(const std::optional<BlockList>& bl) { return bl ? render_run_length(*bl) : ""; }

json report_json(const RatioReport& r) {
    json j{{"set", r.set.brace_str()},
           {"status", to_string(r.status)},
           {"value", r.value ? json(r.value->fraction_str()) : json(nullptr)},
           {"lower", r.lower.fraction_str()},
           {"upper", r.upper.fraction_str()},
           {"lower_witness", r.lower_witness ? json(witness_text(r.lower_witness)) : json(nullptr)},
           {"upper_witness_n", r.upper_witness_n},
           {"method", to_string(r.method)},
           {"note", r.note},
           {"work",
            {{"nodes", r.work.nodes},
             {"interval_n", r.work.interval_n},
             {"circulant_n", r.work.circulant_n},
             {"states", r.work.states},
             {"arcs", r.work.arcs}}}};
    return j;
}

json verdict_json(const FamilyDescriptor& f, const FormulaVerdict& v) {
    json j{{"params", format_params(f, v.params)},
           {"set", v.set.brace_str()},
           {"predicted", v.predicted.fraction_str()},
           {"computed", v.computed ? json(v.computed->fraction_str()) : json(nullptr)},
           {"lower", v.lower.fraction_str()},
           {"upper", v.upper.fraction_str()},
           {"agreement", to_string(v.agreement)},
           {"outcome", to_string(v.outcome)},
           {"detail", v.detail}};
    if (v.witness)
        j["witness"] = {{"blocks", v.witness->notation},
                        {"independent", v.witness->independent},
                        {"density", v.witness->density.fraction_str()}};
    return j;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string num(const Rational& r) { return r.num().str(); }
std::string den(const Rational& r) { return r.den().str(); }

struct Context {
    std::vector<std::string> argv;
    std::ostream& out;
    std::ostream& err;
    bool json_out = false;
    unsigned threads = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    json envelope(const std::string& command, json result) const {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return json{{"schema_version", kSchemaVersion},
                    {"command", {{"name", command}, {"argv", argv}}},
                    {"result", std::move(result)},
                    {"sidecar", {{"seconds", secs}}}};
    }
    void emit(const std::string& command, json result) const { out << envelope(command, std::move(result)).dump(2) << "\n"; }
};

ComputeOptions compute_options(std::uint64_t budget, const std::string& method, unsigned threads) {
    ComputeOptions co;
    co.budget.max_nodes = budget;
    co.limits.threads = threads;
    if (method == "auto") co.method = MethodChoice::automatic;
    else if (method == "search") co.method = MethodChoice::search;
    else if (method == "stategraph") co.method = MethodChoice::stategraph;
    else throw ParseError("unknown method '" + method + "'", 0);
    return co;
}

// A bounded report is upgraded to registry_only when a proved closed form lies inside the bounds.
std::optional<ClosedForm> attach_closed_form(RatioReport& r) {
    auto cf = closed_form(r.set);
    if (r.status == RatioStatus::bounded && cf && cf->kind == FamilyKind::theorem && r.lower <= cf->predicted &&
        cf->predicted <= r.upper) {
        r.status = RatioStatus::registry_only;
        r.value = cf->predicted;
    }
    return cf;
}

int cmd_compute(Context& ctx, const std::string& set_text, const std::string& method, std::uint64_t budget) {
    const DistanceSet s = parse_distance_set(set_text);
    RatioReport r = compute(s, compute_options(budget, method, ctx.threads));
    auto cf = attach_closed_form(r);
    const int code = r.status == RatioStatus::exact ? kOk : kBudgetExhausted;

    if (ctx.json_out) {
        json j = report_json(r);
        if (cf)
            j["closed_form"] = {{"family", cf->family},
                                {"kind", to_string(cf->kind)},
                                {"params", format_params(find_family(cf->family), cf->params)},
                                {"predicted", cf->predicted.fraction_str()}};
        ctx.emit("compute", j);
        return code;
    }
    auto& o = ctx.out;
    o << "S = " << s.brace_str() << "\n";
    if (r.status == RatioStatus::exact) {
        o << "alpha-bar = " << r.value->str() << " (exact)\n";
    } else if (r.status == RatioStatus::registry_only) {
        o << "alpha-bar = " << r.value->str() << " (registry_only: " << cf->family << ")\n";
        o << "computed bounds: " << r.lower.str() << " <= alpha-bar <= " << r.upper.str() << "\n";
    } else {
        o << "bounds: " << r.lower.str() << " <= alpha-bar <= " << r.upper.str() << " (budget exhausted)\n";
    }
    if (r.lower_witness) o << "witness blocks: " << witness_text(r.lower_witness) << "\n";
    if (r.upper_witness_n > 0) o << "upper bound from alpha(G(S)[" << r.upper_witness_n << "])\n";
    o << "method: " << to_string(r.method) << "\n";
    if (!r.note.empty()) o << "note: " << r.note << "\n";
    if (cf && r.status == RatioStatus::exact) {
        o << "closed form: " << cf->family << " (" << to_string(cf->kind) << ") predicts " << cf->predicted.str()
          << (cf->predicted == *r.value ? "" : "  MISMATCH") << "\n";
    }
    return code;
}

int cmd_blocks(Context& ctx, const std::string& set_text, const std::string& notation) {
    const DistanceSet s = parse_distance_set(set_text);
    const BlockList bl = expand_blocks(parse_block_notation(notation));
    const auto bad = verify_periodic_independent(bl, s);
    const Rational d = block_density(bl);
    if (ctx.json_out) {
        json j{{"set", s.brace_str()}, {"blocks", notation}, {"independent", !bad}, {"density", d.fraction_str()},
               {"period", bl.period()}};
        if (bad) j["violation"] = {{"first", bad->first}, {"second", bad->second}, {"distance", bad->distance}};
        ctx.emit("blocks", j);
        return kOk;
    }
    if (bad)
        ctx.out << "not independent: elements " << bad->first << " and " << bad->second << " at distance "
                << bad->distance << "; density " << d.str() << "\n";
    else
        ctx.out << "independent; density " << d.str() << "\n";
    return kOk;
}

int cmd_verify(Context& ctx, const std::string& id, const std::string& range_text, std::uint64_t budget,
               const std::string& csv_path) {
    const FamilyDescriptor& f = find_family(id);
    const Range range = parse_range(range_text);
    VerifyOptions vo;
    vo.compute = compute_options(budget, "auto", 1);
    vo.threads = ctx.threads;
    const auto verdicts = verify_family(id, range.lo, range.hi, vo);

    int counts[4] = {0, 0, 0, 0};
    for (const auto& v : verdicts) ++counts[static_cast<int>(v.outcome)];
    const int failures = counts[static_cast<int>(Outcome::failure)];
    const int unresolved = counts[static_cast<int>(Outcome::unresolved)];
    const int code = failures ? kTheoremMismatch : unresolved ? kBudgetExhausted : kOk;

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot write " + csv_path);
        csv << "params,set,predicted_num,predicted_den,status,value_num,value_den,lower_num,lower_den,upper_num,"
               "upper_den,agreement,outcome\n";
        for (const auto& v : verdicts) {
            csv << csv_quote(format_params(f, v.params)) << ',' << csv_quote(v.set.brace_str()) << ','
                << num(v.predicted) << ',' << den(v.predicted) << ',' << to_string(v.computed_status) << ','
                << (v.computed ? num(*v.computed) : "") << ',' << (v.computed ? den(*v.computed) : "") << ','
                << num(v.lower) << ',' << den(v.lower) << ',' << num(v.upper) << ',' << den(v.upper) << ','
                << to_string(v.agreement) << ',' << to_string(v.outcome) << '\n';
        }
    }

    if (ctx.json_out) {
        json rows = json::array();
        for (const auto& v : verdicts) rows.push_back(verdict_json(f, v));
        ctx.emit("verify", {{"family", f.id},
                            {"kind", to_string(f.kind)},
                            {"verdicts", rows},
                            {"summary",
                             {{"pass", counts[0]}, {"failure", counts[1]}, {"finding", counts[2]}, {"unresolved", counts[3]}}}});
        return code;
    }
    auto& o = ctx.out;
    o << f.id << " (" << to_string(f.kind) << "): " << f.set_text << ", " << f.domain << "\n";
    for (const auto& v : verdicts) {
        o << "  " << format_params(f, v.params) << "  " << v.set.brace_str() << "  predicted "
          << v.predicted.str() << "  computed ";
        if (v.computed) o << v.computed->str();
        else o << "[" << v.lower.str() << ", " << v.upper.str() << "]";
        o << "  " << to_string(v.agreement) << "  " << to_string(v.outcome);
        if (v.witness) o << "  witness " << v.witness->notation;
        if (!v.detail.empty()) o << "  (" << v.detail << ")";
        o << "\n";
    }
    o << "summary: " << counts[0] << " pass, " << counts[1] << " failure, " << counts[2] << " finding, " << counts[3]
      << " unresolved\n";
    return code;
}

int cmd_table(Context& ctx, const std::string& k_text, const std::string& i_text, std::uint64_t budget,
              const std::string& out_path) {
    const Range kr = parse_range(k_text);
    const Range ir = parse_range(i_text);
    if (kr.lo < 1 || ir.lo < 1) throw ParseError("k and i start at 1", 0);
    struct Cell {
        std::int64_t k, i;
        std::optional<RatioReport> report;
    };
    std::vector<Cell> cells;
    for (auto k = kr.lo; k <= kr.hi; ++k)
        for (auto i = ir.lo; i <= ir.hi; ++i) cells.push_back({k, i, std::nullopt});

    const ComputeOptions co = compute_options(budget, "auto", 1);
    parallel_for(cells.size(), ctx.threads, [&](std::size_t j) {
        cells[j].report = compute(DistanceSet{1, 1 + cells[j].k, 1 + cells[j].k + cells[j].i}, co);
    });

    std::ostringstream csv;
    csv << "k,i,set,status,value_num,value_den,lower_num,lower_den,upper_num,upper_den,witness_blocks\n";
    int open = 0;
    for (const auto& c : cells) {
        const RatioReport& r = *c.report;
        std::string status = "exact";
        if (!r.value) {
            ++open;
            status = r.lower_witness && !r.lower.is_zero() ? "lower_bound" : "inconclusive";
        }
        csv << c.k << ',' << c.i << ',' << csv_quote(r.set.brace_str()) << ',' << status << ','
            << (r.value ? num(*r.value) : "") << ',' << (r.value ? den(*r.value) : "") << ',' << num(r.lower) << ','
            << den(r.lower) << ',' << num(r.upper) << ',' << den(r.upper) << ',' << witness_text(r.lower_witness)
            << '\n';
    }

    if (out_path.empty() || out_path == "-") {
        ctx.out << csv.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << csv.str();
        if (ctx.json_out)
            ctx.emit("table", {{"out", out_path}, {"cells", cells.size()}, {"not_exact", open}});
        else
            ctx.out << "wrote " << cells.size() << " cells to " << out_path << " (" << open << " not exact)\n";
    }
    return open ? kBudgetExhausted : kOk;
}

int cmd_families(Context& ctx) {
    if (ctx.json_out) {
        ctx.emit("families", catalog_json());
        return kOk;
    }
    for (const auto& f : list_families())
        ctx.out << f.id << "\t" << to_string(f.kind) << "\t" << f.set_text << "\t" << f.domain << "\n";
    return kOk;
}

void print_cycle(Context& ctx, const std::string& command, const std::string& label, const Rational& density,
                 const CycleWitness& w) {
    const auto positions = witness_positions(w);
    if (ctx.json_out) {
        ctx.emit(command, {{"density", density.fraction_str()},
                           {"period", w.period},
                           {"positions", positions},
                           {"blocks", w.period_set ? render_run_length(primitive_period(*w.period_set)) : ""}});
        return;
    }
    ctx.out << label << " = " << density.str() << "\n";
    ctx.out << "period " << w.period << ", positions";
    for (auto p : positions) ctx.out << ' ' << p;
    ctx.out << "\n";
    if (w.period_set) ctx.out << "blocks: " << render_run_length(primitive_period(*w.period_set)) << "\n";
}

int cmd_domination(Context& ctx, const std::string& set_text) {
    StateGraphLimits lim;
    lim.threads = ctx.threads;
    auto [d, w] = min_dominating_density(parse_distance_set(set_text), lim);
    print_cycle(ctx, "domination", "domination density", d, w);
    return kOk;
}

int cmd_idcode(Context& ctx, const std::string& set_text, int r) {
    if (r < 1) throw ParseError("r must be at least 1", 0);
    StateGraphLimits lim;
    lim.threads = ctx.threads;
    auto [d, w] = min_identifying_density(parse_distance_set(set_text), r, lim);
    print_cycle(ctx, "idcode", "identifying code density", d, w);
    return kOk;
}

std::vector<int> primitive_colors(const std::vector<int>& c) {
    const std::size_t n = c.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool periodic = true;
        for (std::size_t j = p; j < n && periodic; ++j) periodic = c[j] == c[j - p];
        if (periodic) return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(p)};
    }
    return c;
}

int cmd_coloring(Context& ctx, const std::string& set_text, int k) {
    if (k < 1) throw ParseError("k must be at least 1", 0);
    StateGraphLimits lim;
    lim.threads = ctx.threads;
    const DistanceSet s = parse_distance_set(set_text);
    auto w = periodic_coloring(s, k, lim);
    if (ctx.json_out) {
        json j{{"set", s.brace_str()}, {"colors", k}, {"colorable", w.has_value()}};
        if (w) j["period_colors"] = primitive_colors(w->colors);
        ctx.emit("coloring", j);
        return kOk;
    }
    if (!w) {
        ctx.out << "no periodic proper " << k << "-coloring of G(" << s.brace_str() << ")\n";
        return kOk;
    }
    const auto period = primitive_colors(w->colors);
    ctx.out << "periodic proper " << k << "-coloring, period " << period.size() << ":";
    for (int c : period) ctx.out << ' ' << c;
    ctx.out << "\n";
    return kOk;
}

int cmd_chi_f(Context& ctx, const std::string& set_text, std::uint64_t budget) {
    const DistanceSet s = parse_distance_set(set_text);
    RatioReport r = compute(s, compute_options(budget, "auto", ctx.threads));
    if (ctx.json_out) {
        json j{{"set", s.brace_str()}, {"status", to_string(r.status)}};
        if (r.value) j["chi_f"] = r.value->reciprocal().fraction_str();
        j["lower"] = r.upper.reciprocal().fraction_str();
        if (!r.lower.is_zero()) j["upper"] = r.lower.reciprocal().fraction_str();
        ctx.emit("chi-f", j);
        return r.value ? kOk : kBudgetExhausted;
    }
    if (r.value) {
        ctx.out << r.value->reciprocal().str() << "\n";
        return kOk;
    }
    ctx.out << r.upper.reciprocal().str() << " <= chi-f";
    if (!r.lower.is_zero()) ctx.out << " <= " << r.lower.reciprocal().str();
    ctx.out << " (budget exhausted)\n";
    return kBudgetExhausted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{args, out, err};

    CLI::App app{"Exact independence ratios of distance graphs"};
    app.name("dgratio");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", ctx.threads, "worker threads (0 = all cores)");

    std::string set_text, method = "auto", budget_text, notation, family, range_text, k_text, i_text, out_path,
                                     csv_path;
    int r_value = 1, colors = 0;

    auto add_set = [&](CLI::App* sub) { sub->add_option("--set", set_text, "distances, e.g. 1,4,7")->required(); };
    auto add_budget = [&](CLI::App* sub) { sub->add_option("--budget", budget_text, "search node budget"); };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", ctx.json_out, "JSON output"); };

    auto* compute_cmd = app.add_subcommand("compute", "independence ratio of G(S)");
    add_set(compute_cmd);
    compute_cmd->add_option("--method", method, "auto|search|stategraph")
        ->check(CLI::IsMember({"auto", "search", "stategraph"}));
    add_budget(compute_cmd);
    add_json(compute_cmd);

    auto* blocks_cmd = app.add_subcommand("blocks", "check a periodic set given in block notation");
    add_set(blocks_cmd);
    blocks_cmd->add_option("--blocks", notation, "e.g. \"(2 3)^5 7\"")->required();
    add_json(blocks_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check a registry family against computed values");
    verify_cmd->add_option("--family", family, "family id (see `families`)")->required();
    verify_cmd->add_option("--range", range_text, "A..B over the first parameter")->required();
    add_budget(verify_cmd);
    verify_cmd->add_option("--csv", csv_path, "also write predicted/computed series as CSV");
    add_json(verify_cmd);

    auto* table_cmd = app.add_subcommand("table", "grid of S = {1, 1+k, 1+k+i}");
    table_cmd->add_option("--k", k_text, "A..B")->required();
    table_cmd->add_option("--i", i_text, "C..D")->required();
    add_budget(table_cmd);
    table_cmd->add_option("--out", out_path, "CSV file (default stdout)");
    add_json(table_cmd);

    auto* families_cmd = app.add_subcommand("families", "list the closed-form catalog");
    add_json(families_cmd);

    auto* dom_cmd = app.add_subcommand("domination", "minimum density of a periodic dominating set");
    add_set(dom_cmd);
    add_json(dom_cmd);

    auto* id_cmd = app.add_subcommand("idcode", "minimum density of a periodic r-identifying code");
    add_set(id_cmd);
    id_cmd->add_option("--r", r_value, "radius")->required();
    add_json(id_cmd);

    auto* col_cmd = app.add_subcommand("coloring", "periodic proper k-coloring");
    add_set(col_cmd);
    col_cmd->add_option("--k", colors, "number of colors")->required();
    add_json(col_cmd);

    auto* chi_cmd = app.add_subcommand("chi-f", "fractional chromatic number");
    add_set(chi_cmd);
    add_budget(chi_cmd);
    add_json(chi_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const std::uint64_t budget = budget_text.empty() ? default_budget() : parse_budget(budget_text);
        if (compute_cmd->parsed()) return cmd_compute(ctx, set_text, method, budget);
        if (blocks_cmd->parsed()) return cmd_blocks(ctx, set_text, notation);
        if (verify_cmd->parsed()) return cmd_verify(ctx, family, range_text, budget, csv_path);
        if (table_cmd->parsed()) return cmd_table(ctx, k_text, i_text, budget, out_path);
        if (families_cmd->parsed()) return cmd_families(ctx);
        if (dom_cmd->parsed()) return cmd_domination(ctx, set_text);
        if (id_cmd->parsed()) return cmd_idcode(ctx, set_text, r_value);
        if (col_cmd->parsed()) return cmd_coloring(ctx, set_text, colors);
        if (chi_cmd->parsed()) return cmd_chi_f(ctx, set_text, budget);
    } catch (const ResourceError& e) {
        err << "dgratio: resource cap: " << e.what() << "\n";
        return kResourceCap;
    } catch (const std::invalid_argument& e) {
        // ParseError, unknown family id, malformed set.
        err << "dgratio: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "dgratio: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace dgratio::cli
