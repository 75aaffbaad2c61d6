// SPDX-License-Identifier: Apache-2.0
//
// Command runner: maps a JSON run config to a structured report.  Shared
// by the command-line tool and the Python bindings, so both surfaces
// produce identical reports for identical configs.
//
// Commands: space, cantor, hitting, thm39, ps0, trace, symmetry,
// battery-sweep.  Every parameter used is echoed back into the report's
// config block (including defaults), so a report alone suffices to
// reproduce its run.

#pragma once

#include <string>

#include "setlab/report.hpp"

namespace setlab {

/// Dispatches on config["command"].  Throws PreconditionError on unknown
/// commands or invalid parameters.
RunReport run_command(const Json& config);

}  // namespace setlab
