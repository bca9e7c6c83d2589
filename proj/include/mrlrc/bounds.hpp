// Closed-form field-size calculators: headline items (i)-(viii), the prior
// bounds they are compared against, and the exact field sizes the planner
// routes produce. Asymptotic rows carry their big-O constants explicitly
// (default 1) and are marked as asymptotic; exact rows have no slack.
#ifndef MRLRC_BOUNDS_HPP
#define MRLRC_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mrlrc {

struct BoundOptions {
    double constant = 1.0;  // multiplies every big-O expression
    double eps = 0.25;      // the epsilon of the curve-based items (v)/(vi)
};

struct BoundEntry {
    std::string label;
    bool applicable = false;
    bool asymptotic = false;      // big-O formula (constants matter)
    bool lower_bound = false;     // a lower bound, not a construction
    bool existence_only = false;  // probabilistic existence, not explicit
    double log2_value = 0.0;
    // set for exact constructed rows: field size is exactly q^e
    std::uint64_t exact_q = 0, exact_e = 0;
    std::string note;
};

std::vector<BoundEntry> bound_table(int n, int r, int h, int a, const BoundOptions& opts = {});

std::string render_bound_table(const std::vector<BoundEntry>& rows, bool csv);

// One comparison bullet: evaluate both sides over sampled parameter points
// inside the stated regime and confirm the inequality direction.
struct ClaimResult {
    std::string name;
    int points = 0;
    int holds = 0;
    std::vector<std::string> failures;
    bool ok() const { return points > 0 && holds == points; }
};

struct ComparisonReport {
    std::vector<ClaimResult> claims;
    bool all_ok() const {
        for (const auto& c : claims)
            if (!c.ok()) return false;
        return !claims.empty();
    }
};

// Confirms the headline comparison claims at >= 20 points per regime,
// sampling away from each crossover (the stated crossovers are asymptotic).
ComparisonReport check_comparison_claims(const BoundOptions& opts = {});

std::string render_comparison_report(const ComparisonReport& rep);

}  // namespace mrlrc

#endif
