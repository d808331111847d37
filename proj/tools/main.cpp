#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hammock/laurent.hpp"
#include "hammock/quiver.hpp"

using namespace hammock;
using namespace hammock::cli;

namespace {

void quiver_flag(CLI::App *c, RunConfig &cfg, bool required = true) {
    auto *o = c->add_option("--quiver", cfg.quiver, "quiver file (text or JSON)");
    if (required) o->required();
}

void format_flag(CLI::App *c, RunConfig &cfg) {
    c->add_option("--format", cfg.format, "json, tsv or dot")->check(CLI::IsMember({"json", "tsv", "dot"}));
}

void spec_flags(CLI::App *c, RunConfig &cfg) {
    c->add_option("--vertex", cfg.vertex, "vertex name");
    c->add_option("--arrows", cfg.arrows, "arrows of Q-bar, e.g. \"1->2, 2->*\"");
    c->add_option("--variant", cfg.variant, "pi-bar variant")->check(CLI::IsMember({"source", "target"}));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"hammock functions, exceptional families and Euler characteristics of quiver complexes"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *hammock_cmd = app.add_subcommand("hammock", "h_x grid on ZQ and, for Dynkin quivers, H(x)");
    quiver_flag(hammock_cmd, cfg);
    hammock_cmd->add_option("--vertex", cfg.vertex, "vertex V (layer 0) or V@m")->required();
    hammock_cmd->add_option("--window", cfg.window, "number of layers after x")->check(CLI::Range(1, 200));
    hammock_cmd->add_flag("--hset", cfg.hset, "require H(x); exit 3 when the quiver is not Dynkin");
    format_flag(hammock_cmd, cfg);

    auto *exseq_cmd = app.add_subcommand("exseq", "exceptional family table and t-values");
    quiver_flag(exseq_cmd, cfg);
    format_flag(exseq_cmd, cfg);

    auto *pibar_cmd = app.add_subcommand("pibar", "pi-bar multisets per arrow of Q-bar");
    quiver_flag(pibar_cmd, cfg);
    pibar_cmd->add_option("--arrows", cfg.arrows, "restrict to these arrows");
    pibar_cmd->add_option("--variant", cfg.variant, "pi-bar variant")->check(CLI::IsMember({"source", "target"}));
    format_flag(pibar_cmd, cfg);

    auto *complex_cmd = app.add_subcommand("complex", "standard complex skeleton or simple Euler characteristic");
    quiver_flag(complex_cmd, cfg);
    spec_flags(complex_cmd, cfg);
    complex_cmd->add_option("--beta", cfg.beta, "dimension vector, e.g. 1,1,0");
    complex_cmd->add_option("--fspec", cfg.fspec, "value substituted for F")->check(CLI::IsMember({-1, 1}));
    format_flag(complex_cmd, cfg);

    auto *render_cmd = app.add_subcommand("render", "DOT drawing of a standard complex");
    quiver_flag(render_cmd, cfg);
    spec_flags(render_cmd, cfg);
    format_flag(render_cmd, cfg);

    auto *qchar_cmd = app.add_subcommand("qchar", "truncated fundamental and standard characters");
    quiver_flag(qchar_cmd, cfg);
    qchar_cmd->add_option("--vertex", cfg.vertex, "vertex name");
    qchar_cmd->add_option("--arrows", cfg.arrows, "standard spec as arrows of Q-bar");
    format_flag(qchar_cmd, cfg);

    auto *fpoly_cmd = app.add_subcommand("fpoly", "F-polynomials by recursion and by mutation");
    quiver_flag(fpoly_cmd, cfg);
    fpoly_cmd->add_option("--beta", cfg.beta, "dimension vector");
    format_flag(fpoly_cmd, cfg);

    auto *check_cmd = app.add_subcommand("check", "property sweep, one JSON line per suite and quiver");
    quiver_flag(check_cmd, cfg, false);
    check_cmd->add_option("--sweep", cfg.sweep, "e.g. A1-6,D4-5,T6,R100");
    check_cmd->add_option("--seed", cfg.seed, "seed for random quivers");
    check_cmd->add_flag("--inject-fault", cfg.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kBadInput;
    }
    for (auto *c : {complex_cmd, render_cmd, qchar_cmd, pibar_cmd})
        if (c->parsed() && c->count("--arrows")) cfg.arrows_given = true;

    try {
        if (hammock_cmd->parsed()) return cmd_hammock(cfg, std::cout);
        if (exseq_cmd->parsed()) return cmd_exseq(cfg, std::cout);
        if (pibar_cmd->parsed()) return cmd_pibar(cfg, std::cout);
        if (complex_cmd->parsed()) return cmd_complex(cfg, std::cout);
        if (render_cmd->parsed()) return cmd_render(cfg, std::cout);
        if (qchar_cmd->parsed()) return cmd_qchar(cfg, std::cout);
        if (fpoly_cmd->parsed()) return cmd_fpoly(cfg, std::cout);
        if (check_cmd->parsed()) return cmd_check(cfg, std::cout);
    } catch (const QuiverError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == QuiverError::Kind::NotDynkin ? kNotDynkin : kBadInput;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    return kBadInput;
}
