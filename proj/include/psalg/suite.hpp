#ifndef PSALG_SUITE_HPP
#define PSALG_SUITE_HPP

#include <functional>
#include <string>
#include <vector>

#include "psalg/catalog.hpp"

namespace psalg {

enum class SuiteMode { Quick, Full };

struct SuiteItemResult {
    std::string group;   // e.g. "thm3.6"
    std::string id;      // item id with the sampled parameters spelled out
    bool pass = false;
    std::string detail;  // short human-readable outcome
    std::vector<std::string> flags;  // label/wording discrepancies worth surfacing
};

struct SuiteGroupSummary {
    std::string group;
    std::string heading;  // the case this group covers in the classification
    size_t total = 0, passed = 0;
};

struct SuiteReport {
    SuiteMode mode = SuiteMode::Quick;
    bool parallel = false;
    bool pass = false;
    std::vector<SuiteItemResult> items;
    std::vector<SuiteGroupSummary> groups;
    std::vector<std::string> flags;  // union of item flags, deduplicated
};

// Runs the full verification program: rank-1 families, the rank-2
// classification with necessity witnesses, corollary basis changes, the
// associative families with their cross-checks against the pre-Lie ones,
// the residual-equation batteries, nullspace dimensions, and the Hopf/
// normalization property suites. Quick mode samples one parameter set per
// family and shrinks the randomized suites. Items are independent; with
// `parallel` they run under OpenMP, and the report is identical either way.
SuiteReport run_classification_suite(SuiteMode mode, bool parallel);

// Deterministic renderings (byte-identical for identical inputs).
std::string render_text(const SuiteReport& r);

}  // namespace psalg

#endif
