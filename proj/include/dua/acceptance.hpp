#pragma once

#include <iosfwd>

namespace dua {

// Runs the full verification battery, printing one PASS/FAIL line per
// criterion. Returns true when every criterion passes. Randomised batches are
// driven by the seed.
bool run_acceptance(unsigned seed, std::ostream& out);

} // namespace dua
