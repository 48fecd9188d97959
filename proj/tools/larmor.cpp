// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "larmor/cli.hpp"

int main(int argc, char** argv) {
    return larmor::cli::run(argc, argv, std::cout, std::cerr);
}
