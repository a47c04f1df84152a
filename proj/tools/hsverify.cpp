// Command-line front end: assembles the corpus (default, config-driven, or
// both), runs the claim suite, and writes the report.  Exit status: 0 when
// no applicable claim failed, 1 when one did, 2 for configuration problems.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hallschmidt/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"finite-group structure verifier"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "run the claim suite");
    std::string config_path, checks_list, out_path, format;
    int jobs = 0;
    std::int64_t lattice_cap = 0, element_cap = 0;
    bool timing = false;
    verify->add_option("--config", config_path, "configuration file");
    verify->add_option("--checks", checks_list,
                       "comma-separated claim families (H,L1,L3,L4,L5,L6,T,COR)");
    verify->add_option("--out", out_path, "write the report to this file");
    verify->add_option("--format", format, "json or text");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--lattice-cap", lattice_cap,
                       "largest order analyzed with a full subgroup lattice");
    verify->add_option("--element-cap", element_cap,
                       "largest group order that may be enumerated");
    verify->add_flag("--timing", timing, "include per-entry and per-claim millis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        hs::RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw hs::IoError("cannot open config '" + config_path + "'");
            cfg = hs::parse_config(in);
        }
        if (verify->count("--checks")) {
            cfg.checks = hs::split_list(checks_list);
            hs::validate_checks(cfg.checks);
        }
        if (verify->count("--out")) cfg.out = out_path;
        if (verify->count("--format")) {
            if (format != "json" && format != "text")
                throw hs::ConfigError("format must be 'json' or 'text'");
            cfg.format = format;
        }
        if (verify->count("--jobs")) {
            if (jobs < 1 || jobs > 256) throw hs::ConfigError("jobs out of range");
            cfg.jobs = jobs;
        }
        if (verify->count("--lattice-cap")) {
            if (lattice_cap < 1) throw hs::ConfigError("lattice cap must be positive");
            cfg.lattice_cap = lattice_cap;
        }
        if (verify->count("--element-cap")) {
            if (element_cap < 1) throw hs::ConfigError("element cap must be positive");
            cfg.element_cap = element_cap;
        }
        if (timing) cfg.timing = true;

        std::vector<hs::CorpusEntry> corpus = hs::generate_corpus(cfg);
        hs::SuiteReport rep = hs::run_suite(corpus, cfg);
        if (!cfg.out.empty()) {
            std::ofstream os(cfg.out);
            if (!os) throw hs::IoError("cannot open output '" + cfg.out + "'");
            hs::write_report(os, rep);
        } else {
            hs::write_report(std::cout, rep);
        }
        return hs::exit_code(rep);
    } catch (const std::exception& e) {
        std::cerr << "hsverify: " << e.what() << "\n";
        return 2;
    }
}
