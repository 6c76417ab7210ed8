// permeq: brute-force and formula verification for pattern-replacement
// equivalence classes of permutations.

#include <iostream>

#include <CLI11.hpp>

#include "permeq/report.hpp"

using namespace permeq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // NOT_CONNECTED / verify mismatch
constexpr int kExitUsage = 2;     // parse or resource errors

struct CommonArgs {
    std::string preset;
    std::string partition;
    std::string mode = "general";
    std::string format = "text";
    int threads = 0;

    ReplacementPartition resolve_partition() const {
        if (!preset.empty() && !partition.empty())
            throw PartitionSpecError("--preset and --partition are mutually exclusive");
        if (!preset.empty()) return ReplacementPartition::preset(preset);
        if (!partition.empty()) return ReplacementPartition::parse(partition);
        throw PartitionSpecError("one of --preset / --partition is required");
    }

    EngineOptions engine_options() const {
        EngineOptions opts;
        opts.threads = threads;
        return opts;
    }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_partition) {
    if (with_partition) {
        cmd->add_option("--preset", args.preset, "preset partition (P1..P7, PK)");
        cmd->add_option("--partition", args.partition,
                        "explicit partition, e.g. \"213,231|132,312\"");
    }
    cmd->add_option("--mode", args.mode, "general|adjacent|doubly|values")
        ->check(CLI::IsMember({"general", "adjacent", "doubly", "values"}));
    cmd->add_option("--format", args.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--threads", args.threads, "worker threads (0 = all)");
}

int default_n_max(Mode mode) {
    switch (mode) {
        case Mode::General: return 7;
        case Mode::AdjPositions:
        case Mode::AdjValues: return 8;
        case Mode::AdjBoth: return 10;
    }
    return 7;
}

int cmd_table(const CommonArgs& common, const std::string& kind, int n_max) {
    std::vector<std::string> presets;
    std::vector<Mode> modes;
    std::vector<TableKind> kinds;
    if (!common.preset.empty()) {
        presets = {common.preset};
    } else if (!common.partition.empty()) {
        throw PartitionSpecError("table works on presets; use 'class' for ad-hoc partitions");
    } else {
        presets = {"P1", "P2", "P3", "P4", "P5", "P6", "P7"};
    }
    modes = {parse_mode(common.mode)};
    if (kind == "classes" || kind == "both") kinds.push_back(TableKind::Classes);
    if (kind == "identity" || kind == "both") kinds.push_back(TableKind::Identity);

    const int limit = n_max > 0 ? n_max : default_n_max(modes.front());
    const auto rows =
        table_rows(presets, modes, kinds, limit, common.engine_options(), true);
    std::cout << render_rows(rows, common.format);
    return kExitOk;
}

int cmd_verify(const CommonArgs& common, int n_max) {
    const VerifyReport report = run_verify(n_max, common.engine_options(), true);
    std::cout << render_report(report, common.format);
    std::cerr << report.match_count() << " checks matched\n";
    return report.has_mismatch() ? kExitNegative : kExitOk;
}

int cmd_class(const CommonArgs& common, const std::string& perm_text, long limit) {
    const Permutation p = Permutation::from_string(perm_text);
    const ReplacementPartition P = common.resolve_partition();
    const Mode mode = parse_mode(common.mode);
    const auto members = eq_class(p, P, mode, common.engine_options());

    const size_t shown =
        limit >= 0 ? std::min<size_t>(members.size(), static_cast<size_t>(limit))
                   : members.size();
    if (common.format == "json") {
        std::cout << "{\"permutation\":\"" << p.str() << "\",\"size\":" << members.size()
                  << ",\"members\":[";
        for (size_t i = 0; i < shown; ++i)
            std::cout << (i ? "," : "") << '"' << members[i].str() << '"';
        std::cout << "]}\n";
    } else {
        std::cout << "size " << members.size() << "\n";
        for (size_t i = 0; i < shown; ++i) std::cout << members[i].str() << "\n";
        if (shown < members.size())
            std::cout << "... (" << members.size() - shown << " more)\n";
    }
    return kExitOk;
}

int cmd_path(const CommonArgs& common, const std::string& from_text,
             const std::string& to_text) {
    const Permutation from = Permutation::from_string(from_text);
    const Permutation to = Permutation::from_string(to_text);
    const ReplacementPartition P = common.resolve_partition();
    const Mode mode = parse_mode(common.mode);

    const auto path = reachable(from, to, P, mode, common.engine_options());
    if (!path) {
        std::cout << "NOT_CONNECTED\n";
        return kExitNegative;
    }
    // re-validate before printing
    Permutation cur = from;
    for (const WitnessStep& step : path->steps) {
        if (step.perm != cur || !is_legal_move(cur, step.move, P, mode))
            throw Error("internal: witness path failed re-validation");
        cur = apply_move(cur, step.move);
    }
    if (cur != to) throw Error("internal: witness path does not reach the target");

    std::cout << from.str() << "\n";
    for (const WitnessStep& step : path->steps) {
        std::cout << "  positions (";
        for (size_t i = 0; i < step.move.positions.size(); ++i)
            std::cout << (i ? "," : "") << step.move.positions[i];
        std::cout << ") " << step.move.from_pattern.str() << " -> "
                  << step.move.to_pattern.str() << "\n";
        std::cout << apply_move(step.perm, step.move).str() << "\n";
    }
    std::cout << path->steps.size() << " steps\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-replacement equivalence classes of permutations"};
    app.require_subcommand(1);

    CommonArgs table_args, verify_args, class_args, path_args;
    std::string table_kind = "both";
    int table_n_max = 0, verify_n_max = 7;
    std::string class_perm, path_from, path_to;
    long class_limit = -1;

    auto* table = app.add_subcommand("table", "brute-force results-table cells");
    add_common(table, table_args, true);
    table->add_option("--kind", table_kind, "classes|identity|both")
        ->check(CLI::IsMember({"classes", "identity", "both"}));
    table->add_option("--n-max", table_n_max, "largest n (default depends on mode)");

    auto* verify = app.add_subcommand("verify", "run every registered check");
    add_common(verify, verify_args, false);
    verify->add_option("--n-max", verify_n_max, "largest n (default 7)");

    auto* cls = app.add_subcommand("class", "equivalence class of a permutation");
    add_common(cls, class_args, true);
    cls->add_option("perm", class_perm, "permutation, e.g. 3412")->required();
    cls->add_option("--limit", class_limit, "cap on members printed");

    auto* path = app.add_subcommand("path", "shortest witness path between permutations");
    add_common(path, path_args, true);
    path->add_option("from", path_from, "start permutation")->required();
    path->add_option("to", path_to, "target permutation")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return cmd_table(table_args, table_kind, table_n_max);
        if (verify->parsed()) return cmd_verify(verify_args, verify_n_max);
        if (cls->parsed()) return cmd_class(class_args, class_perm, class_limit);
        if (path->parsed()) return cmd_path(path_args, path_from, path_to);
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
