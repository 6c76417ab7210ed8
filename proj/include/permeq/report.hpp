#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permeq/characterizations.hpp"
#include "permeq/sequences.hpp"

namespace permeq {

enum class RowStatus { Match, Mismatch, Unpublished, PublishedDisagrees };

std::string_view status_name(RowStatus s);

// One brute-force-vs-comparands cell of the results table.
struct VerificationRow {
    std::string preset;
    std::string mode;
    std::string kind;  // "classes" | "identity"
    int n = 0;
    BigInt brute_force;
    std::optional<BigInt> published;
    std::optional<BigInt> formula;
    RowStatus status = RowStatus::Unpublished;
};

// Computes brute-force values for the requested cells and attaches the
// published / formula comparands.  n runs from 3 to n_max, clamped per
// mode by the engine caps.
std::vector<VerificationRow> table_rows(const std::vector<std::string>& presets,
                                        const std::vector<Mode>& modes,
                                        const std::vector<TableKind>& kinds, int n_max,
                                        const EngineOptions& opts, bool progress = false);

struct CheckRow {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerificationRow> rows;
    std::vector<CheckRow> checks;

    bool has_mismatch() const;
    size_t match_count() const;
};

// Full sweep: every populated table cell, every registered
// characterization, and the invariant suites, up to n_max.
VerifyReport run_verify(int n_max, const EngineOptions& opts, bool progress = false);

// Rendering; format is "text", "json", or "csv".
std::string render_rows(const std::vector<VerificationRow>& rows,
                        const std::string& format);
std::string render_report(const VerifyReport& report, const std::string& format);

}  // namespace permeq
