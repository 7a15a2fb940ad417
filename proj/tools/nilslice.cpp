#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "nilslice/campaign.hpp"

using namespace nilslice;

namespace {

struct CliOptions {
    CampaignConfig cfg;
    std::string kind_name;
    int m = 0, n = -1;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* sub, CliOptions& o) {
    sub->add_option("--kind", o.kind_name, "Algebra family: C, D, or B")
        ->check(CLI::IsMember({"C", "D", "B"}));
    sub->add_option("--m", o.m, "Fix the rank m");
    sub->add_option("--n", o.n, "Fix the orbit index n");
    sub->add_option("--m-max", o.cfg.m_max, "Largest rank when --m is not given")
        ->check(CLI::Range(1, 12));
    sub->add_option("--samples", o.cfg.samples, "Samples per cell");
    sub->add_option("--seed", o.cfg.seed, "Campaign seed (fully determines all samples)");
    sub->add_option("--tol", o.cfg.tol, "Numeric tolerance (exact checks ignore it)");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Write the report to this path instead of stdout");
}

int run(CliOptions& o, Command command) {
    o.cfg.command = command;
    if (!o.kind_name.empty()) o.cfg.kind = kind_from_name(o.kind_name);
    if (o.m > 0) o.cfg.m = o.m;
    if (o.n >= 0) o.cfg.n = o.n;
    const Report rep = run_campaign(o.cfg);
    const std::string body = o.format == "json" ? report_to_json(rep) : report_to_text(rep);
    if (o.out.empty()) {
        std::cout << body << "\n";
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot open " << o.out << "\n";
            return 2;
        }
        f << body << "\n";
    }
    return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilslice: verification campaigns for nilpotent-orbit transverse slices"};
    app.require_subcommand(1);

    const std::pair<const char*, Command> commands[] = {
        {"verify-charpoly", Command::Charpoly},
        {"verify-jm", Command::JM},
        {"verify-lambda", Command::Lambda},
        {"verify-transversality", Command::Transversality},
        {"verify-kleinian", Command::Kleinian},
        {"verify-embedding", Command::Embedding},
        {"verify-smoothness", Command::Smoothness},
        {"report-all", Command::All},
    };

    std::vector<std::unique_ptr<CliOptions>> opts;
    int rc = 0;
    for (const auto& [name, cmd] : commands) {
        auto o = std::make_unique<CliOptions>();
        CLI::App* sub = app.add_subcommand(name, command_name(cmd));
        add_common(sub, *o);
        CliOptions* optr = o.get();
        const Command c = cmd;
        sub->callback([optr, c, &rc] { rc = run(*optr, c); });
        opts.push_back(std::move(o));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
