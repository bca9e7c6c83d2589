// Acceptance suite: one check per headline property, each printing a
// single pass/fail line. Driven by both the CLI selftest command and the
// acceptance test binary.
#ifndef MRLRC_SELFTEST_HPP
#define MRLRC_SELFTEST_HPP

#include <iosfwd>

namespace mrlrc {

struct SelftestOptions {
    int jobs = 0;
    std::uint64_t pattern_cap = 1'000'000;      // MR pattern enumeration
    std::uint64_t codeword_cap = 1ull << 28;    // brute-force distance enumeration
};

// Runs all acceptance checks; returns the number of failed criteria.
int run_acceptance(std::ostream& os, const SelftestOptions& opts = {});

}  // namespace mrlrc

#endif
