#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <optional>

#include "combigen/combigen.hpp"
#include "combigen/oracle.hpp"

namespace combigen::cli {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace {

struct Options {
    std::string list;
    std::optional<std::string> order;
    std::optional<std::size_t> r;
    std::string format;
    std::string sep = ",";
    std::string empty = "()";
    bool stats = false;
    bool count_only = false;
    std::optional<std::uint64_t> limit;
    bool verify = false;
    // comb / subset
    bool pruned = false;
    std::string mode;
    // paren / compose / partition
    std::uint64_t n = 0;
    std::string parts;
    std::optional<std::string> bounds;
    bool allow_zero = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Int>
std::vector<Int> parse_integers(const std::string& text, const char* what) {
    std::vector<Int> values;
    for (const auto& piece : split_tokens(text)) {
        Int v{};
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc{} || ptr != piece.data() + piece.size())
            throw UsageError(std::string("invalid integer in ") + what + ": '" + piece + "'");
        values.push_back(v);
    }
    return values;
}

FormatSpec make_format(const Options& opt, FormatKind fallback) {
    FormatSpec spec;
    spec.kind = fallback;
    if (opt.format == "spaced") spec.kind = FormatKind::Spaced;
    else if (opt.format == "concat") spec.kind = FormatKind::Concatenated;
    else if (opt.format == "delimited") spec.kind = FormatKind::Delimited;
    spec.separator = opt.sep;
    spec.empty_placeholder = opt.empty;
    return spec;
}

CombMode parse_mode(const std::string& mode, CombMode fallback) {
    if (mode.empty()) return fallback;
    return mode == "distinct" ? CombMode::Distinct : CombMode::Multiset;
}

/// Streams formatted lines, honours --limit and --count-only, and keeps the
/// lines when --verify needs them.
class LineSink {
public:
    LineSink(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    bool accept(std::string line) {
        ++count_;
        if (opt_.verify) lines_.push_back(line);
        if (!opt_.count_only) {
            out_ << line << '\n';
        }
        return !(opt_.limit && count_ >= *opt_.limit);
    }

    std::uint64_t count() const noexcept { return count_; }
    const std::vector<std::string>& lines() const noexcept { return lines_; }

private:
    const Options& opt_;
    std::ostream& out_;
    std::uint64_t count_ = 0;
    std::vector<std::string> lines_;
};

struct Outcome {
    GenStats stats;
    std::vector<std::string> expected;  // filled only under --verify
};

std::vector<std::string> format_all(const std::vector<Emission>& emissions, const FormatSpec& spec) {
    std::vector<std::string> lines;
    for (const auto& e : emissions) lines.push_back(format_emission(e, spec));
    return lines;
}

std::vector<std::string> format_all(const std::vector<std::vector<Part>>& seqs, const FormatSpec& spec) {
    std::vector<std::string> lines;
    for (const auto& s : seqs) lines.push_back(format_parts(s, spec));
    return lines;
}

struct TokenInstance {
    InputList list;
    OrderSet order;
    std::size_t r;
};

TokenInstance token_instance(const Options& opt) {
    InputList list(split_tokens(opt.list));
    OrderSet order = opt.order ? OrderSet(split_tokens(*opt.order)) : OrderSet::first_occurrence(list.items());
    const std::size_t r = opt.r.value_or(list.size());
    return {std::move(list), std::move(order), r};
}

PartsSet parts_set(const Options& opt) {
    auto parts = parse_integers<Part>(opt.parts, "--parts");
    if (opt.bounds) return PartsSet(std::move(parts), parse_integers<std::size_t>(*opt.bounds, "--bounds"));
    return PartsSet(std::move(parts));
}

Outcome dispatch(const std::string& command, const Options& opt, LineSink& lines) {
    Outcome outcome;
    if (command == "paren") {
        const auto spec = make_format(opt, FormatKind::Concatenated);
        auto sink = [&](const EmissionView& e) { return lines.accept(format_emission(e, spec)); };
        outcome.stats = generate_parenthesizations(opt.n, sink);
        if (opt.verify) outcome.expected = format_all(oracle::brute_parenthesizations(opt.n), spec);
        return outcome;
    }
    if (command == "compose" || command == "partition") {
        const auto spec = make_format(opt, FormatKind::Spaced);
        const auto parts = parts_set(opt);
        CompositionOptions copts{opt.allow_zero};
        auto sink = [&](std::span<const Part> e) { return lines.accept(format_parts(e, spec)); };
        if (command == "partition") {
            outcome.stats = generate_partitions(opt.n, parts, sink, copts);
            if (opt.verify) outcome.expected = format_all(oracle::brute_partitions(opt.n, parts), spec);
        } else if (parts.has_bounds()) {
            outcome.stats = generate_compositions_bounded(opt.n, parts, sink, copts);
            if (opt.verify) outcome.expected = format_all(oracle::brute_compositions(opt.n, parts, true), spec);
        } else {
            outcome.stats = generate_compositions(opt.n, parts, sink, copts);
            if (opt.verify) outcome.expected = format_all(oracle::brute_compositions(opt.n, parts), spec);
        }
        return outcome;
    }

    const auto spec = make_format(opt, FormatKind::Spaced);
    const auto inst = token_instance(opt);
    auto sink = [&](const EmissionView& e) { return lines.accept(format_emission(e, spec)); };
    if (command == "perm") {
        outcome.stats = generate_permutations(inst.list, inst.order, inst.r, sink);
        if (opt.verify) outcome.expected = format_all(oracle::brute_permutations(inst.list, inst.order, inst.r), spec);
    } else if (command == "derange") {
        outcome.stats = generate_derangements(inst.list, inst.order, inst.r, sink);
        if (opt.verify) outcome.expected = format_all(oracle::brute_derangements(inst.list, inst.order, inst.r), spec);
    } else if (command == "comb") {
        const auto mode = parse_mode(opt.mode, CombMode::Multiset);
        outcome.stats = opt.pruned ? generate_combinations_pruned(inst.list, inst.order, inst.r, mode, sink)
                                   : generate_combinations(inst.list, inst.order, inst.r, mode, sink);
        if (opt.verify)
            outcome.expected = format_all(oracle::brute_combinations(inst.list, inst.order, inst.r, mode), spec);
    } else if (command == "subset") {
        const auto mode = parse_mode(opt.mode, CombMode::Distinct);
        outcome.stats = generate_subsets(inst.list, inst.order, mode, sink);
        if (opt.verify) outcome.expected = format_all(oracle::brute_subsets(inst.list, inst.order, mode), spec);
    }
    return outcome;
}

void add_output_flags(CLI::App* sub, Options& opt) {
    sub->add_option("--format", opt.format, "Line format")->check(CLI::IsMember({"spaced", "concat", "delimited"}));
    sub->add_option("--sep", opt.sep, "Separator for --format delimited");
    sub->add_option("--empty", opt.empty, "Placeholder printed for an empty structure");
    sub->add_flag("--stats", opt.stats, "Print run statistics to standard error");
    sub->add_flag("--count-only", opt.count_only, "Print only the number of structures");
    sub->add_option("--limit", opt.limit, "Stop after N structures")->check(CLI::PositiveNumber);
    sub->add_flag("--verify", opt.verify, "Check the output against the brute-force oracle");
}

void add_token_flags(CLI::App* sub, Options& opt, bool with_r) {
    sub->add_option("--list", opt.list, "Comma-separated input tokens")->required();
    sub->add_option("--order", opt.order, "Comma-separated imposed order (default: first occurrence in --list)");
    if (with_r) sub->add_option("-r", opt.r, "Structure length (default: length of --list)");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Streaming combinatorial generator over count arrays"};
    app.name("combigen");
    app.require_subcommand(1);
    Options opt;

    auto* perm = app.add_subcommand("perm", "Unique r-permutations of a multiset");
    add_token_flags(perm, opt, true);
    auto* derange = app.add_subcommand("derange", "r-derangements against the positions of --list");
    add_token_flags(derange, opt, true);
    auto* comb = app.add_subcommand("comb", "r-combinations of a multiset");
    add_token_flags(comb, opt, true);
    comb->add_flag("--pruned", opt.pruned, "Use the dead-branch-free generator");
    comb->add_option("--mode", opt.mode, "multiset (default) or distinct")
        ->check(CLI::IsMember({"multiset", "distinct"}));
    auto* subset = app.add_subcommand("subset", "All subsets in one traversal");
    add_token_flags(subset, opt, false);
    subset->add_option("--mode", opt.mode, "distinct (default) or multiset")
        ->check(CLI::IsMember({"multiset", "distinct"}));
    auto* paren = app.add_subcommand("paren", "Balanced bracket sequences of n pairs");
    paren->add_option("-n", opt.n, "Number of bracket pairs")->required();
    auto* compose = app.add_subcommand("compose", "Compositions of n over allowed parts");
    auto* partition = app.add_subcommand("partition", "Partitions of n over allowed parts");
    for (auto* sub : {compose, partition}) {
        sub->add_option("-n", opt.n, "Target sum")->required();
        sub->add_option("--parts", opt.parts, "Comma-separated distinct positive parts, in order")->required();
        sub->add_option("--bounds", opt.bounds, "Comma-separated maximum use count per part");
        sub->add_flag("--allow-zero", opt.allow_zero, "Accept n = 0 (emits one empty composition)");
    }
    for (auto* sub : {perm, derange, comb, subset, paren, compose, partition}) add_output_flags(sub, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    LineSink lines(opt, out);
    try {
        const auto start = std::chrono::steady_clock::now();
        const auto outcome = dispatch(command, opt, lines);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        if (opt.count_only) out << lines.count() << '\n';
        out.flush();
        if (opt.stats) {
            char ms[32];
            std::snprintf(ms, sizeof ms, "%.3f", elapsed.count());
            err << "nodes_visited=" << outcome.stats.nodes_visited << '\n'
                << "emissions=" << outcome.stats.emissions << '\n'
                << "wasteful_branches=" << outcome.stats.wasteful_branches << '\n'
                << "elapsed_ms=" << ms << '\n';
        }
        if (opt.verify) {
            auto expected = outcome.expected;
            if (expected.size() > lines.lines().size()) expected.resize(lines.lines().size());
            if (expected != lines.lines()) {
                err << "verify: output differs from the brute-force oracle\n";
                return kVerifyMismatch;
            }
            err << "verify: ok (" << lines.count() << " structures match)\n";
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        const bool limits = e.kind() == ErrorKind::TooLargeForOracle || e.kind() == ErrorKind::CounterOverflow;
        return limits ? kLimits : kUsage;
    }
    return kOk;
}

} // namespace combigen::cli
