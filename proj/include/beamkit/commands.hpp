// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_COMMANDS_HPP
#define BEAMKIT_COMMANDS_HPP

#include <string>

#include "beamkit/config.hpp"

namespace beamkit {

// One function per CLI verb. Each returns the process exit code: 0 on
// success, 3 when a verification delta exceeds the tolerance. Validation
// and feasibility problems are reported by exception instead.
int cmd_plan(const RunConfig &config);
int cmd_verify(const RunConfig &config);
int cmd_pattern(const RunConfig &config);
int cmd_cut(const RunConfig &config);
int cmd_sweep_length(const RunConfig &config);
int cmd_sweep_quant(const RunConfig &config);
int cmd_error_table(const RunConfig &config);

int run_command(const std::string &verb, const RunConfig &config);

}  // namespace beamkit

#endif
