// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "ccr/cli/app.hpp"

int main(int argc, char** argv) { return ccr::cli::run_cli(argc, argv, std::cout, std::cerr); }
