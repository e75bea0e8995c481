// SPDX-License-Identifier: Apache-2.0
//
// beamkit - multibeam planar array synthesis and verification
// Copyright (C) 2026 beamkit contributors

#ifndef BEAMKIT_BEAMKIT_HPP
#define BEAMKIT_BEAMKIT_HPP

#include "beamkit/closed_form.hpp"
#include "beamkit/errors.hpp"
#include "beamkit/excitation.hpp"
#include "beamkit/geometry.hpp"
#include "beamkit/pattern.hpp"
#include "beamkit/synthesis.hpp"

#endif
