#include "permeq/report.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace permeq {

std::string_view status_name(RowStatus s) {
    switch (s) {
        case RowStatus::Match: return "MATCH";
        case RowStatus::Mismatch: return "MISMATCH";
        case RowStatus::Unpublished: return "UNPUBLISHED";
        case RowStatus::PublishedDisagrees: return "PUBLISHED_DISAGREES";
    }
    return "?";
}

namespace {

std::string kind_name(TableKind k) {
    return k == TableKind::Classes ? "classes" : "identity";
}

std::optional<BigInt> published_value(const std::string& preset, const std::string& mode,
                                      TableKind kind, int n) {
    try {
        const auto& seq = figure1_expected(preset, mode, kind);
        const int i = n - 3;
        if (i < 0 || i >= static_cast<int>(seq.size())) return std::nullopt;
        return seq[static_cast<size_t>(i)];
    } catch (const NoPublishedData&) {
        return std::nullopt;
    }
}

RowStatus judge(const VerificationRow& row) {
    if (row.formula && *row.formula != row.brute_force) return RowStatus::Mismatch;
    if (row.published && *row.published != row.brute_force)
        return RowStatus::PublishedDisagrees;
    if (row.published || row.formula) return RowStatus::Match;
    return RowStatus::Unpublished;
}

}  // namespace

std::vector<VerificationRow> table_rows(const std::vector<std::string>& presets,
                                        const std::vector<Mode>& modes,
                                        const std::vector<TableKind>& kinds, int n_max,
                                        const EngineOptions& opts, bool progress) {
    std::vector<VerificationRow> rows;
    for (const std::string& preset : presets) {
        const ReplacementPartition& P = ReplacementPartition::preset(preset);
        for (Mode mode : modes) {
            for (TableKind kind : kinds) {
                for (int n = 3; n <= std::min(n_max, opts.max_n(mode)); ++n) {
                    if (progress)
                        std::cerr << "computing " << preset << " " << mode_name(mode)
                                  << " " << kind_name(kind) << " n=" << n << "\n";
                    VerificationRow row;
                    row.preset = preset;
                    row.mode = std::string(mode_name(mode));
                    row.kind = kind_name(kind);
                    row.n = n;
                    try {
                        row.brute_force =
                            kind == TableKind::Classes
                                ? BigInt(classes(n, P, mode, opts).class_count)
                                : BigInt(identity_class_size(n, P, mode, opts));
                    } catch (const TooLarge&) {
                        break;
                    }
                    row.published = published_value(preset, row.mode, kind, n);
                    row.formula = formula_value(preset, row.mode, kind, n);
                    row.status = judge(row);
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

bool VerifyReport::has_mismatch() const {
    if (std::any_of(rows.begin(), rows.end(),
                    [](const VerificationRow& r) { return r.status == RowStatus::Mismatch; }))
        return true;
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckRow& c) { return !c.passed; });
}

size_t VerifyReport::match_count() const {
    size_t count = 0;
    for (const auto& r : rows)
        if (r.status == RowStatus::Match) ++count;
    for (const auto& c : checks)
        if (c.passed) ++count;
    return count;
}

namespace {

void add_check(VerifyReport& rep, std::string name, bool passed, std::string detail = "") {
    rep.checks.push_back(CheckRow{std::move(name), passed, std::move(detail)});
}

void characterization_checks(VerifyReport& rep, int n_max, const EngineOptions& opts) {
    for (const auto& [preset, mode] : characterization_registry()) {
        for (int n = 3; n <= std::min(n_max, 7); ++n) {
            const CharacterizationReport r = check_characterization(n, preset, mode, opts);
            std::string detail = "predicted=" + std::to_string(r.predicted_set_size) +
                                 " engine=" + std::to_string(r.engine_set_size);
            if (!r.mismatch_examples.empty())
                detail += " first_mismatch=" + r.mismatch_examples.front().str();
            add_check(rep,
                      "characterization " + preset + "/" + std::string(mode_name(mode)) +
                          " n=" + std::to_string(n),
                      r.success(), detail);
        }
    }
}

void invariant_checks(VerifyReport& rep, int n_max, const EngineOptions& opts) {
    const std::vector<Mode> all_modes = {Mode::General, Mode::AdjPositions, Mode::AdjBoth,
                                         Mode::AdjValues};

    // Neighbor symmetry + mode monotonicity, exhaustively for small n.
    for (int n = 3; n <= std::min(n_max, 6); ++n) {
        const uint64_t nf = factorial(n);
        bool symmetric = true, monotone = true;
        for (const std::string& name : ReplacementPartition::preset_names()) {
            const ReplacementPartition& P = ReplacementPartition::preset(name);
            std::map<Mode, std::vector<std::vector<Permutation>>> adj;
            for (Mode mode : all_modes) {
                auto& lists = adj[mode];
                lists.resize(nf);
                for (uint64_t r = 0; r < nf; ++r)
                    lists[r] = neighbors(unrank(n, r), P, mode);
            }
            for (Mode mode : all_modes) {
                const auto& lists = adj[mode];
                for (uint64_t r = 0; r < nf && symmetric; ++r) {
                    const Permutation p = unrank(n, r);
                    for (const Permutation& q : lists[r]) {
                        const auto& back = lists[rank(q).index];
                        if (!std::binary_search(back.begin(), back.end(), p)) {
                            symmetric = false;
                            break;
                        }
                    }
                }
            }
            for (uint64_t r = 0; r < nf && monotone; ++r) {
                auto subset = [](const std::vector<Permutation>& a,
                                 const std::vector<Permutation>& b) {
                    return std::includes(b.begin(), b.end(), a.begin(), a.end());
                };
                if (!subset(adj[Mode::AdjBoth][r], adj[Mode::AdjPositions][r]) ||
                    !subset(adj[Mode::AdjPositions][r], adj[Mode::General][r]))
                    monotone = false;
            }
        }
        add_check(rep, "neighbor symmetry n=" + std::to_string(n), symmetric);
        add_check(rep, "mode monotonicity n=" + std::to_string(n), monotone);
    }

    // Inverse conjugation: adjacent-values class sizes match
    // adjacent-positions sizes as multisets.
    for (int n = 3; n <= std::min(n_max, 6); ++n) {
        bool ok = true;
        for (const std::string& name : ReplacementPartition::preset_names()) {
            const ReplacementPartition& P = ReplacementPartition::preset(name);
            if (classes(n, P, Mode::AdjValues, opts).sorted_sizes() !=
                classes(n, P, Mode::AdjPositions, opts).sorted_sizes())
                ok = false;
        }
        add_check(rep, "inverse conjugation class sizes n=" + std::to_string(n), ok);
    }

    // Refinement chains P1 <= P3 <= P7 and P4 <= P5 <= P7.
    for (int n = 3; n <= std::min(n_max, 6); ++n) {
        bool ok = true;
        const std::vector<std::pair<std::string, std::string>> chains = {
            {"P1", "P3"}, {"P3", "P7"}, {"P4", "P5"}, {"P5", "P7"}};
        for (Mode mode : all_modes) {
            for (const auto& [fine, coarse] : chains) {
                const auto& Pf = ReplacementPartition::preset(fine);
                const auto& Pc = ReplacementPartition::preset(coarse);
                if (classes(n, Pf, mode, opts).class_count <
                    classes(n, Pc, mode, opts).class_count)
                    ok = false;
                for (uint64_t r = 0; r < factorial(n) && ok; ++r) {
                    const Permutation p = unrank(n, r);
                    const auto nf_fine = neighbors(p, Pf, mode);
                    const auto nf_coarse = neighbors(p, Pc, mode);
                    if (!std::includes(nf_coarse.begin(), nf_coarse.end(),
                                       nf_fine.begin(), nf_fine.end()))
                        ok = false;
                }
            }
        }
        add_check(rep, "refinement monotonicity n=" + std::to_string(n), ok);
    }

    // All class sizes odd under (P3, adjacent).
    for (int n = 3; n <= std::min(n_max, 8); ++n) {
        const auto summary =
            classes(n, ReplacementPartition::preset("P3"), Mode::AdjPositions, opts);
        const bool ok = std::all_of(summary.class_sizes.begin(), summary.class_sizes.end(),
                                    [](uint64_t s) { return s % 2 == 1; });
        add_check(rep, "P3-adjacent class sizes all odd n=" + std::to_string(n), ok);
    }

    // Chinese-monoid odd-n recurrence.
    for (int n : {5, 7}) {
        if (n > n_max) continue;
        const auto& P3 = ReplacementPartition::preset("P3");
        const uint64_t odd = identity_class_size(n, P3, Mode::AdjPositions, opts);
        const uint64_t even = identity_class_size(n - 1, P3, Mode::AdjPositions, opts);
        add_check(rep, "Chinese monoid recurrence n=" + std::to_string(n),
                  odd == static_cast<uint64_t>(n) * even,
                  std::to_string(odd) + " vs " + std::to_string(n) + "*" +
                      std::to_string(even));
    }

    // Catalan convolution structure behind the central binomial counts.
    int bad = 0;
    add_check(rep, "central binomial convolution identities",
              gf_convolution_check(std::max(10, n_max), &bad),
              bad ? "failing size " + std::to_string(bad) : "");

    // Published literals agree with the closed forms at every published
    // index (no brute force involved).
    bool literals_ok = true;
    std::string literal_detail;
    for (std::string preset : {"P1", "P2", "P3", "P4", "P5", "P6", "P7"}) {
        for (std::string mode : {"general", "adjacent", "doubly"}) {
            for (TableKind kind : {TableKind::Classes, TableKind::Identity}) {
                std::vector<BigInt> seq;
                try {
                    seq = figure1_expected(preset, mode, kind);
                } catch (const NoPublishedData&) {
                    continue;
                }
                for (size_t i = 0; i < seq.size(); ++i) {
                    const int n = static_cast<int>(i) + 3;
                    const auto f = formula_value(preset, mode, kind, n);
                    if (f && *f != seq[i]) {
                        literals_ok = false;
                        literal_detail = preset + "/" + mode + "/" + kind_name(kind) +
                                         " n=" + std::to_string(n);
                    }
                }
            }
        }
    }
    add_check(rep, "published literals vs closed forms", literals_ok, literal_detail);
}

}  // namespace

VerifyReport run_verify(int n_max, const EngineOptions& opts, bool progress) {
    VerifyReport rep;
    rep.rows = table_rows({"P1", "P2", "P3", "P4", "P5", "P6", "P7"},
                          {Mode::General, Mode::AdjPositions, Mode::AdjBoth},
                          {TableKind::Classes, TableKind::Identity}, n_max, opts, progress);
    if (progress) std::cerr << "running characterization checks\n";
    characterization_checks(rep, n_max, opts);
    if (progress) std::cerr << "running invariant checks\n";
    invariant_checks(rep, n_max, opts);
    return rep;
}

namespace {

nlohmann::json row_json(const VerificationRow& r) {
    nlohmann::json j;
    j["preset"] = r.preset;
    j["mode"] = r.mode;
    j["kind"] = r.kind;
    j["n"] = r.n;
    j["value"] = r.brute_force.str();
    j["published"] = r.published ? nlohmann::json(r.published->str()) : nlohmann::json();
    j["formula"] = r.formula ? nlohmann::json(r.formula->str()) : nlohmann::json();
    j["provenance"] = "brute-force";
    j["status"] = std::string(status_name(r.status));
    return j;
}

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->str() : ""; }

}  // namespace

std::string render_rows(const std::vector<VerificationRow>& rows,
                        const std::string& format) {
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(row_json(r));
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == "csv") {
        out << "preset,mode,kind,n,brute_force,published,formula,status\n";
        for (const auto& r : rows)
            out << r.preset << ',' << r.mode << ',' << r.kind << ',' << r.n << ','
                << r.brute_force.str() << ',' << opt_str(r.published) << ','
                << opt_str(r.formula) << ',' << status_name(r.status) << "\n";
        return out.str();
    }
    for (const auto& r : rows) {
        out << r.preset << " " << r.mode << " " << r.kind << " n=" << r.n << " value="
            << r.brute_force.str();
        if (r.published) out << " published=" << r.published->str();
        if (r.formula) out << " formula=" << r.formula->str();
        out << " " << status_name(r.status) << "\n";
    }
    return out.str();
}

std::string render_report(const VerifyReport& report, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["rows"] = nlohmann::json::array();
        for (const auto& r : report.rows) j["rows"].push_back(row_json(r));
        j["checks"] = nlohmann::json::array();
        for (const auto& c : report.checks) {
            nlohmann::json cj;
            cj["name"] = c.name;
            cj["passed"] = c.passed;
            cj["detail"] = c.detail;
            j["checks"].push_back(cj);
        }
        j["ok"] = !report.has_mismatch();
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << render_rows(report.rows, format);
    if (format == "csv") {
        out << "check,passed,detail\n";
        for (const auto& c : report.checks)
            out << '"' << c.name << "\"," << (c.passed ? "1" : "0") << ",\"" << c.detail
                << "\"\n";
    } else {
        for (const auto& c : report.checks)
            out << (c.passed ? "MATCH   " : "MISMATCH") << " " << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
    return out.str();
}

}  // namespace permeq
