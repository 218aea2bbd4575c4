// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace lerch {

/// The lerch-verify command line. Exit codes: 0 when no verdict is fail,
/// 1 on any fail verdict, 2 on usage or domain errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lerch
