#include "schro/bench.hpp"
#include "schro/error.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

schro::RunConfig load(const std::string& path, const std::vector<std::string>& sets, const char* default_problem)
{
    schro::Settings s;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in)
            throw schro::ConfigError("cannot read config file '" + path + "'");
        s = schro::read_settings(in);
    }
    for (const auto& a : sets)
        schro::apply_setting(s, a);
    if (!s.count("problem"))
        s["problem"] = default_problem;
    return schro::resolve_config(s);
}

template <class Write>
void emit(const std::string& out, Write&& write)
{
    if (out == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(out);
    if (!os)
        throw schro::ConfigError("cannot open output '" + out + "'");
    write(os);
}

int selftest()
{
    bool ok = true;
    for (const auto& r : schro::run_selftest()) {
        std::printf("%-32s %s  measured %.3e  tol %.1e  %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL", r.measured,
                    r.tolerance, r.detail.c_str());
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cubature propagator for the free Schroedinger equation on boxes"};
    app.require_subcommand(1);

    std::string config;
    std::vector<std::string> sets;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    app.add_subcommand("selftest", "Run the internal self-test suites");
    auto* conv = app.add_subcommand("convergence", "Error table against the reference solution");
    auto* field = app.add_subcommand("field", "Field slice of a traveling Gaussian on a grid");
    for (auto* sub : {conv, field}) {
        sub->add_option("--config", config, "key=value config file");
        sub->add_option("--set", sets, "Override one key, key=value")->allow_extra_args(false);
        sub->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("selftest"))
            return selftest();
        if (app.got_subcommand("convergence")) {
            const auto cfg = load(config, sets, "table3");
            if (cfg.problem == "field-slice")
                throw schro::ConfigError("field-slice is produced by the field subcommand");
            const auto rows = schro::run_convergence(cfg, threads);
            emit(cfg.out, [&](std::ostream& os) { schro::write_convergence_csv(os, cfg, rows); });
            return 0;
        }
        const auto cfg = load(config, sets, "field-slice");
        if (cfg.problem != "field-slice")
            throw schro::ConfigError("the field subcommand takes problem=field-slice");
        emit(cfg.out, [&](std::ostream& os) { schro::run_field_slice(cfg, os); });
        return 0;
    } catch (const schro::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const schro::ToleranceNotReached& e) {
        std::fprintf(stderr, "tolerance not reached: %s\n", e.what());
        return 1;
    } catch (const schro::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
