#pragma once

#include "dgratio/registry.hpp"

namespace dgratio::detail {

std::vector<FamilyDescriptor> build_families();

}  // namespace dgratio::detail
