// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "lerch/cli.hpp"

int main(int argc, char** argv) { return lerch::run_cli(argc, argv, std::cout, std::cerr); }
