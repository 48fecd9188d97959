// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

//! Umbrella header for the core library. The command-line front end lives
//! in larmor/cli.hpp and is not pulled in here, so library users do not
//! acquire its argument-parsing dependency.

#pragma once

#include "larmor/dirac.hpp"
#include "larmor/errors.hpp"
#include "larmor/matrix4.hpp"
#include "larmor/oracle.hpp"
#include "larmor/quantities.hpp"
#include "larmor/registry.hpp"
#include "larmor/sampling.hpp"
#include "larmor/sweep.hpp"
#include "larmor/table.hpp"
#include "larmor/verify.hpp"
#include "larmor/version.hpp"
