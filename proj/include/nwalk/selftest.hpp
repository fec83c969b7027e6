#pragma once

#include "nwalk/io.hpp"

namespace nwalk {

/// Small-n cross-checks of the brute-force oracle, the DPs, the closed-form
/// series and the feasibility checker. Takes a few seconds.
SelftestReport run_selftest();

}  // namespace nwalk
