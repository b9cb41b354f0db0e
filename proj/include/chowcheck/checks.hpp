#ifndef CHOWCHECK_CHECKS_HPP
#define CHOWCHECK_CHECKS_HPP

#include <chrono>
#include <string>
#include <vector>

namespace chowcheck {

/// Outcome of a single verification step.
///
/// `expected` is built by independent construction of the object the source
/// derivation asserts (a transliterated formula, a frozen value, a stated
/// solution); `computed` is what the engine re-derives.  Both are canonical
/// renderings, so string equality is object equality.  Status is "pass" when
/// the two agree exactly, "fail" when they do not, and "discrepancy-noted"
/// for the handful of places where the stated form and the derived form
/// differ in a way the check itself explains (convention-dependent splits,
/// span-equivalent presentations); a noted row downgrades to "fail" if its
/// recorded explanation stops holding.
struct CheckResult {
    std::string check_id;
    std::string anchor;    ///< quoted source formula the step re-derives
    std::string status;    ///< "pass", "fail", or "discrepancy-noted"
    std::string expected;
    std::string computed;
    std::chrono::microseconds elapsed{0};  ///< in-memory only, never rendered
};

/// One full run: engine version, parameter names, results sorted by check id.
struct SuiteReport {
    std::string version;
    std::vector<std::string> parameters;
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    int noted = 0;
};

/// Selectable group names, sorted.
const std::vector<std::string>& check_groups();

/// Run the selected groups; "all" expands to every group.  An unknown name
/// throws Error::Kind::BadArgument.  Duplicate selections run once.  The
/// returned checks are sorted by check_id, so a given selection always
/// produces the identical report.
SuiteReport run_suite(const std::vector<std::string>& selection);

/// Fixed-width table, one row per check, followed by a summary line.
std::string render_text(const SuiteReport& report);

/// JSON document with keys version, parameters, checks, summary.  Byte
/// deterministic for a given report.
std::string render_json(const SuiteReport& report);

} // namespace chowcheck

#endif
