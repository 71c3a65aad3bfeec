#pragma once

#include "dgratio/blocks.hpp"
#include "dgratio/distance_set.hpp"
#include "dgratio/ratio.hpp"
#include "dgratio/rational.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dgratio {

enum class FamilyKind { theorem, conjecture, lower_bound, upper_bound, limit };
std::string to_string(FamilyKind k);

using Params = std::vector<std::int64_t>;

struct ParamSpec {
    std::string name;
    std::int64_t min;
};

/// One closed-form statement about a parameterized family of distance sets.
/// For bound kinds the value rule gives the bound; limit kinds have no finite-parameter value,
/// only the limit itself and the lower-bound construction used to approach it.
struct FamilyDescriptor {
    std::string id;
    FamilyKind kind = FamilyKind::theorem;
    std::vector<ParamSpec> params;
    std::string set_text;  // e.g. "{1,4,k}"
    std::string domain;    // side conditions and exception lists, human readable
    std::string anchor;

    std::function<bool(const Params&)> in_domain;
    std::function<DistanceSet(const Params&)> set_builder;
    std::function<Rational(const Params&)> value_rule;                       // not for limit kind
    std::function<Rational(const Params&)> limit_rule;                       // limit kind only
    std::function<std::optional<BlockStructure>(const Params&)> witness_builder;  // may be empty
    std::optional<Rational> strict_upper;  // bound kinds: value also stays strictly below this
    bool findings_only = false;            // violations are findings, not failures

    /// Parameter tuples in the domain whose first parameter lies in [lo, hi].
    std::function<std::vector<Params>(std::int64_t lo, std::int64_t hi)> points;
    /// Default sweep for witness sampling and catalog listings.
    std::int64_t sample_lo = 0;
    std::int64_t sample_hi = 0;

    /// Reverse lookup on a normalized set; empty if the family does not cover it.
    std::function<std::optional<Params>(const DistanceSet&)> match;

    bool has_value() const { return kind != FamilyKind::limit; }
    bool exact_kind() const { return kind == FamilyKind::theorem || kind == FamilyKind::conjecture; }
};

/// All families, in declared precedence order within each kind.
const std::vector<FamilyDescriptor>& list_families();

/// Throws std::invalid_argument for an unknown id.
const FamilyDescriptor& find_family(const std::string& id);

/// The family's value (or bound) at p; nullopt outside the domain, on an exception, or for limits.
std::optional<Rational> predict(const FamilyDescriptor& f, const Params& p);

std::string format_params(const FamilyDescriptor& f, const Params& p);

struct ClosedForm {
    std::string family;
    FamilyKind kind;
    Params params;
    DistanceSet set;  // the normalized set that was matched
    Rational predicted;
};

/// First family covering S (after normalization): theorems, then conjectures, then bounds.
std::optional<ClosedForm> closed_form(const DistanceSet& s);

struct WitnessCheck {
    std::string notation;
    bool independent = false;
    Rational density;
    std::optional<Violation> violation;
};

/// Builds, expands and verifies the family's witness at p; nullopt if the family has none there.
std::optional<WitnessCheck> check_witness(const FamilyDescriptor& f, const Params& p);

enum class Agreement { match, mismatch, unresolved };
enum class Outcome { pass, failure, finding, unresolved };
std::string to_string(Agreement a);
std::string to_string(Outcome o);

struct FormulaVerdict {
    explicit FormulaVerdict(DistanceSet s) : set(std::move(s)) {}

    std::string family;
    FamilyKind kind = FamilyKind::theorem;
    Params params;
    DistanceSet set;
    Rational predicted;  // value, bound, or (limits) witness density
    std::optional<Rational> computed;
    RatioStatus computed_status = RatioStatus::bounded;
    Rational lower{0};
    Rational upper{1};
    Agreement agreement = Agreement::unresolved;
    std::optional<WitnessCheck> witness;
    Outcome outcome = Outcome::unresolved;
    std::string detail;
};

struct VerifyOptions {
    ComputeOptions compute;
    unsigned threads = 0;
};

/// Predicted versus computed value for every domain point with first parameter in [lo, hi].
/// Results are in parameter order regardless of scheduling.
std::vector<FormulaVerdict> verify_family(const std::string& id, std::int64_t lo, std::int64_t hi,
                                          const VerifyOptions& options = {});

/// Catalog listing: id, kind, parameters, set, domain, anchor.
nlohmann::json catalog_json();

/// Judges one point against an already computed report.
FormulaVerdict judge(const FamilyDescriptor& f, const Params& p, const RatioReport& report);

}  // namespace dgratio
