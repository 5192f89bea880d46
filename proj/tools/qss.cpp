// qss: batch front end over the library. Every command writes JSON lines to stdout.

#include <CLI11.hpp>

#include "qss/cli.hpp"

namespace {

void add_profile(CLI::App* cmd, qss::cli::RunConfig& c, bool with_r) {
    cmd->add_option("--m", c.m, "even rank m")->required();
    cmd->add_option("--n", c.n, "odd rank n")->required();
    if (with_r) cmd->add_option("--r", c.r, "degree r")->required();
}

void add_common(CLI::App* cmd, qss::cli::RunConfig& c, std::string& format) {
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-r", c.max_r, "cap on r for group-exhaustive commands");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Schur superalgebras: combinatorics, canonical bases, cells, tensor space"};
    app.require_subcommand(1);
    qss::cli::RunConfig c;
    std::string format = "json";

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig table of S_r, one line per w");
    kl->add_option("--rank", c.r, "rank r of S_r")->required();
    kl->add_option("--cache", c.cache, "cache file (default: $QSS_CACHE_DIR/kl-R.jsonl)");
    add_common(kl, c, format);

    auto* matrices = app.add_subcommand("matrices", "enumerate M(m|n,r)");
    add_profile(matrices, c, true);
    matrices->add_option("--row", c.row, "row weight, e.g. \"2|1\"");
    matrices->add_option("--col", c.col, "column weight");
    add_common(matrices, c, format);

    auto* words = app.add_subcommand("coset-words", "double-coset words of one matrix");
    add_profile(words, c, false);
    words->add_option("--matrix", c.matrix, "matrix as JSON rows")->required();
    add_common(words, c, format);

    auto* rsk = app.add_subcommand("rsk", "super RSK of one matrix");
    add_profile(rsk, c, false);
    rsk->add_option("--matrix", c.matrix, "matrix as JSON rows")->required();
    add_common(rsk, c, format);

    auto* canonical = app.add_subcommand("canonical", "canonical basis over the standard basis");
    add_profile(canonical, c, true);
    canonical->add_option("--basis", c.basis, "theta or theta-prime");
    add_common(canonical, c, format);

    auto* cells = app.add_subcommand("cells", "left, right and two-sided super cells");
    add_profile(cells, c, true);
    add_common(cells, c, format);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_profile(verify, c, true);
    verify->add_option("--suite", c.suite, "dims, rsk, bar, cellular, tensor or all");
    verify->add_flag("--symbolic", c.symbolic, "solve the tensor commutant over Q(v)");
    add_common(verify, c, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    c.command = app.get_subcommands().front()->get_name();
    c.format = format == "text" ? qss::cli::OutputFormat::text : qss::cli::OutputFormat::json;
    return qss::cli::dispatch(c);
}
