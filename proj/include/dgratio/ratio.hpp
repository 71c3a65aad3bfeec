#pragma once

#include "dgratio/search.hpp"
#include "dgratio/stategraph.hpp"

namespace dgratio {

enum class MethodChoice { automatic, search, stategraph };

struct ComputeOptions {
    MethodChoice method = MethodChoice::automatic;
    WorkBudget budget;
    StateGraphLimits limits;
};

/// Normalizes S, answers all-odd sets directly, then uses the state graph when
/// max(S) fits its cap (falling back to search if the graph is too large) or search otherwise.
RatioReport compute(const DistanceSet& s, const ComputeOptions& options = {});

/// Reciprocal of the independence ratio; throws InexactError when only bounds are known.
Rational fractional_chromatic(const DistanceSet& s, const ComputeOptions& options = {});

/// Witness for d*S from a witness for S: every element x becomes d consecutive integers d*x .. d*x+d-1.
BlockList scale_blocks(const BlockList& bl, std::int64_t d);

}  // namespace dgratio
