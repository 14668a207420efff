#include <mutid/error.hpp>
#include <mutid/expansion.hpp>
#include <mutid/identities.hpp>
#include <mutid/lattice.hpp>
#include <mutid/pipeline.hpp>
#include <mutid/symmetric_group.hpp>
#include <mutid/symmetrize.hpp>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace
{

using namespace mutid;

enum Exit
{
    ok = 0,
    falsity = 1,
    usage = 2,
};

struct Options
{
    int degree = 0;
    std::string partition;
    std::uint32_t prime = default_prime;
    bool rational = false;
    std::string cache;
    std::string out;
    std::string format = "json";
    bool timings = false;

    std::string monomial;
    std::string builtin;
    std::string file;
    bool symmetrized = false;
};

void emit(const Options &o, const std::string &text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw std::runtime_error("cannot write " + o.out);
    f << text;
}

std::string render(const Options &o, const nlohmann::json &j, const std::string &text)
{
    return o.format == "text" ? text : j.dump(2) + "\n";
}

SearchOptions search_options(const Options &o)
{
    SearchOptions s;
    s.prime = o.prime;
    s.rational = o.rational;
    if (!o.cache.empty())
        s.cache = o.cache;
    s.timings = o.timings;
    return s;
}

void check_degree(int n)
{
    if (n < 1)
        throw CLI::ValidationError("--degree", "a positive degree is required");
    if (n > 7)
        fmt::print(stderr, "warning: degree {} is beyond every size guard; expect a resource error\n", n);
}

// One identity from --builtin, --file or --monomial (a single monomial).
Identity input_identity(const Options &o)
{
    if (!o.builtin.empty())
        return builtin(o.builtin);
    if (!o.file.empty()) {
        std::ifstream f(o.file);
        if (!f)
            throw std::runtime_error("cannot read " + o.file);
        return {o.file, read_identity(f)};
    }
    if (!o.monomial.empty())
        return {o.monomial, parse_identity(o.monomial)};
    throw CLI::ValidationError("input", "one of --builtin, --file or --monomial is required");
}

int cmd_expand(const Options &o)
{
    const Identity id = input_identity(o);
    const auto x = expand_polynomial(id.body);
    nlohmann::json j{{"degree", id.degree()}, {"input", to_string(id.body)}, {"expansion", to_string(x)}};
    emit(o, render(o, j, to_string(x) + "\n"));
    return ok;
}

int cmd_verify(const Options &o)
{
    const Identity id = input_identity(o);
    const auto x = expand_polynomial(id.body);
    const bool holds = x.is_zero();
    nlohmann::json j{{"name", id.name}, {"degree", id.degree()}, {"identity", holds}};
    if (!holds)
        j["residual"] = to_string(x);
    std::string text = fmt::format("{}: {}\n", id.name, holds ? "identity" : "not an identity");
    if (!holds)
        text += "residual: " + to_string(x) + "\n";
    emit(o, render(o, j, text));
    return holds ? ok : falsity;
}

int cmd_consequences(const Options &o)
{
    const Identity id = input_identity(o);
    const auto cs = consequences(id);
    std::ostringstream os;
    if (o.format == "text") {
        for (const auto &c : cs)
            write_identity(os, c.body, c.name);
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (const auto &c : cs)
            j.push_back({{"name", c.name}, {"body", to_string(c.body)}});
        os << j.dump(2) << '\n';
    }
    emit(o, os.str());
    return ok;
}

int cmd_kernel(const Options &o)
{
    check_degree(o.degree);
    const SparseMatrix e = expansion_matrix(o.degree);
    nlohmann::json j{{"degree", o.degree}, {"rows", e.rows()}, {"cols", e.cols()}};
    std::size_t rank = 0;
    std::optional<IntMatrix> lattice;
    if (o.rational) {
        if (o.degree > 4)
            throw ResourceLimit("--rational is limited to degree 4");
        const RatRcf k = all_identities_rational(o.degree);
        rank = e.cols() - k.rank();
        lattice = integer_nullspace(k);
        j["ring"] = "QQ";
    } else {
        rank = rank_mod_p(e, o.prime);
        j["ring"] = fmt::format("GF({})", o.prime);
    }
    j["rank"] = rank;
    j["nullity"] = e.cols() - rank;
    std::string text = fmt::format("degree {} over {}: {} x {}, rank {}, nullity {}\n", o.degree,
                                   j["ring"].get<std::string>(), e.rows(), e.cols(), rank, e.cols() - rank);
    if (lattice && !o.out.empty()) {
        std::ofstream f(o.out);
        write_triplets(f, *lattice, o.degree, j.dump());
        std::cout << render(o, j, text);
        return ok;
    }
    emit(o, render(o, j, text));
    return ok;
}

int cmd_search(const Options &o)
{
    check_degree(o.degree);
    const SearchReport r = run_degree_search(o.degree, search_options(o));
    emit(o, render(o, to_json(r, o.timings), to_text(r, o.timings)));
    if (!r.failed_stage.empty()) {
        fmt::print(stderr, "stage {} failed: {}\n", r.failed_stage, r.error);
        return r.error.starts_with("resource") ? usage : falsity;
    }
    return ok;
}

int cmd_partition(const Options &o)
{
    check_degree(o.degree);
    const Partition lambda = parse_partition(o.partition);
    if (partition_size(lambda) != o.degree)
        throw CLI::ValidationError("--partition", o.partition + " is not a partition of the degree");
    const PartitionReport r = run_partition_search(o.degree, lambda, search_options(o));
    emit(o, render(o, to_json(r, o.timings), to_text(r, o.timings)));
    return ok;
}

int cmd_degree6(const Options &o)
{
    SearchOptions s = search_options(o);
    s.progress = [](std::size_t done, std::size_t total) {
        fmt::print(stderr, "partition {}/{}\n", done + 1, total);
        return true;
    };
    const SearchReport r = run_degree6_table(s);
    emit(o, render(o, to_json(r, o.timings), to_text(r, o.timings)));
    if (!r.failed_stage.empty()) {
        fmt::print(stderr, "stage {} failed: {}\n", r.failed_stage, r.error);
        return falsity;
    }
    return ok;
}

std::string character_table_text(const CharacterTable &t)
{
    std::string s = fmt::format("{:>8}", "");
    for (const auto &c : t.classes)
        s += fmt::format(" {:>7}", to_string(c.cycle_type));
    s += "\n";
    for (std::size_t i = 0; i < t.partitions.size(); ++i) {
        s += fmt::format("{:>8}", to_string(t.partitions[i]));
        for (const auto v : t.values[i])
            s += fmt::format(" {:>7}", v);
        s += "\n";
    }
    return s;
}

int cmd_chartable(const Options &o)
{
    check_degree(o.degree);
    const CharacterTable &t = character_table(o.degree);
    emit(o, render(o, to_json(t), character_table_text(t)));
    return ok;
}

int cmd_matrix(const Options &o)
{
    check_degree(o.degree);
    std::ostringstream os;
    if (o.partition.empty()) {
        write_triplets(os, expansion_matrix(o.degree), o.degree,
                       nlohmann::json{{"matrix", "expansion"}}.dump());
    } else {
        const Partition lambda = parse_partition(o.partition);
        if (partition_size(lambda) != o.degree)
            throw CLI::ValidationError("--partition", o.partition + " is not a partition of the degree");
        const SymmetrizedBasis basis = symmetrized_basis(o.degree, lambda);
        const SparseMatrix m =
            o.symmetrized ? symmetrized_expansion_matrix(basis) : reduced_symmetrized_expansion_matrix(basis);
        write_triplets(os, m, o.degree,
                       nlohmann::json{{"matrix", o.symmetrized ? "symmetrized" : "reduced-symmetrized"},
                                      {"partition", o.partition}}
                           .dump());
    }
    emit(o, os.str());
    return ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Polynomial identities for mutation algebras"};
    app.require_subcommand(1);
    Options o;

    const auto common = [&](CLI::App *c) {
        c->add_option("--degree,-n", o.degree, "Degree");
        c->add_option("--partition", o.partition, "Partition, e.g. 32 or 3,2");
        c->add_option("--prime", o.prime, "Prime modulus")->check(CLI::Range(3u, 46337u));
        c->add_flag("--rational", o.rational, "Exact rational arithmetic (degree <= 4)");
        c->add_option("--cache", o.cache, "Cache directory");
        c->add_option("--out,-o", o.out, "Output file");
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        c->add_flag("--timings", o.timings, "Report wall time per stage");
    };
    const auto input = [&](CLI::App *c) {
        c->add_option("--monomial", o.monomial, "Bracketed monomial, e.g. (ab)c");
        c->add_option("--builtin", o.builtin, "Built-in identity")->check(CLI::IsMember(builtin_names()));
        c->add_option("--file", o.file, "Identity file");
    };

    struct Command
    {
        const char *name;
        const char *help;
        int (*run)(const Options &);
        bool takes_identity;
    };
    const Command commands[] = {
        {"expand", "Expand an identity into pq-words", cmd_expand, true},
        {"verify", "Check that an identity expands to zero (exit 1 if not)", cmd_verify, true},
        {"consequences", "Degree n+1 consequences of an identity", cmd_consequences, true},
        {"kernel", "Rank and nullity of the expansion matrix", cmd_kernel, false},
        {"search", "Full identity search in one degree", cmd_search, false},
        {"partition", "Identity search restricted to one partition", cmd_partition, false},
        {"degree6", "Degree-6 multiplicity table (long-running, checkpointed)", cmd_degree6, false},
        {"chartable", "Character table of S_n", cmd_chartable, false},
        {"matrix", "Expansion matrix in triplet format", cmd_matrix, false},
    };
    std::vector<std::pair<CLI::App *, int (*)(const Options &)>> subs;
    for (const auto &c : commands) {
        CLI::App *sub = app.add_subcommand(c.name, c.help);
        common(sub);
        if (c.takes_identity)
            input(sub);
        if (std::string_view(c.name) == "matrix")
            sub->add_flag("--full", o.symmetrized, "Unreduced symmetrised matrix (with --partition)");
        subs.emplace_back(sub, c.run);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        for (const auto &[sub, run] : subs)
            if (sub->parsed())
                return run(o);
    } catch (const CLI::ValidationError &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return usage;
    } catch (const ParseError &e) {
        if (e.line() > 0)
            fmt::print(stderr, "parse error at line {}, column {}: {}\n", e.line(), e.column(), e.message());
        else
            fmt::print(stderr, "parse error at column {}: {}\n", e.column(), e.message());
        return usage;
    } catch (const ResourceLimit &e) {
        fmt::print(stderr, "resource limit: {}\n", e.what());
        return usage;
    } catch (const ConsistencyError &e) {
        fmt::print(stderr, "consistency failure: {}\n", e.what());
        return falsity;
    } catch (const std::exception &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return usage;
    }
    return usage;
}
