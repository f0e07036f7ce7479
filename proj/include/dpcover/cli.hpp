#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpcover {

// Entry point behind the dpcover binary, exposed so tests can drive the
// exact command path.  The report written to out is byte-deterministic for
// fixed inputs and seeds; wall-clock timing goes to err only.  Exit code 0
// means no failures, no disagreements and no parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dpcover
