#pragma once

#include <ostream>

namespace tropjac {

// Runs the full verification suite, printing one pass/fail line per
// criterion. Returns true iff everything passed.
bool run_acceptance(std::ostream& out);

}  // namespace tropjac
