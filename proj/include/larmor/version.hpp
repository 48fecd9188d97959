// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace larmor {

inline constexpr const char* version_string = "0.1.0";

}  // namespace larmor
