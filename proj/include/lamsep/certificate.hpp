#pragma once

#include <string>
#include <vector>

#include "lamsep/separation.hpp"

namespace lamsep {

struct LocationClass;

/// Machine-readable JSON payloads attached to InternalInvariant errors, so a
/// failing instance can be replayed via `lamsep selfcheck --replay`.
std::string certificate_for_pair(const ManySidedSeparation& a, const ManySidedSeparation& b);
std::string certificate_for_family(const SeparationFamily& f);
std::string certificate_for_build(const Graph& g, const SeparationFamily& f,
                                  const std::vector<LocationClass>& classes,
                                  const std::string& reason);

} // namespace lamsep
