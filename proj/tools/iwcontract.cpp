// Command-line front end: build algebras, emit invariants, run the
// verification suites, estimate the index. All output is JSON and
// byte-deterministic for a fixed configuration.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <iwcontract/iwcontract.hpp>

namespace {

using namespace iwcontract;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

void emit(const ordered_json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text += '\n';
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error("cannot open output file: " + out_path);
        f << text;
    }
}

std::size_t thread_cap() {
    if (const char* env = std::getenv("IWCONTRACT_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

Mode parse_mode(const std::string& s) {
    if (s == "symbolic") return Mode::symbolic;
    if (s == "sampled") return Mode::sampled;
    if (s == "auto") return Mode::automatic;
    throw Error("unknown mode: " + s);
}

struct VerifyOptions {
    Mode mode = Mode::automatic;
    std::uint64_t seed = 0;
    int samples = 25;
    std::vector<std::string> suites;
};

std::vector<CheckReport> run_suites(SpecContext& ctx, const VerifyOptions& opt) {
    bool all = false;
    std::vector<std::string> wanted;
    for (const auto& s : opt.suites) {
        if (s == "all")
            all = true;
        else if (s == "structure" || s == "invariance" || s == "index" || s == "regularity" ||
                 s == "nullcone" || s == "highest")
            wanted.push_back(s);
        else
            throw Error("unknown suite: " + s +
                        " (expected structure,invariance,index,regularity,nullcone,highest,all)");
    }
    if (all) {
        wanted = {"structure", "invariance", "index", "regularity", "highest"};
        if (ctx.alg.spec.family == Family::A) wanted.push_back("nullcone");
    }
    if (wanted.empty()) throw Error("no suites selected");

    bool need_invariants = false;
    for (const auto& s : wanted)
        if (s != "structure") need_invariants = true;
    if (need_invariants) ctx.invariants();  // build once, before any parallel run

    std::vector<std::function<std::vector<CheckReport>()>> tasks;
    for (const auto& s : wanted) {
        if (s == "structure")
            tasks.emplace_back([&ctx] { return check_structure_suite(ctx); });
        else if (s == "invariance")
            tasks.emplace_back(
                [&ctx, &opt] { return check_invariance_suite(ctx, opt.mode, opt.seed, opt.samples); });
        else if (s == "index")
            tasks.emplace_back(
                [&ctx, &opt] { return check_index_and_degrees(ctx, opt.seed, opt.samples); });
        else if (s == "regularity")
            tasks.emplace_back(
                [&ctx, &opt] { return check_regularity_suite(ctx, opt.seed, opt.samples); });
        else if (s == "nullcone")
            tasks.emplace_back([&ctx, &opt] { return check_nullcone_inequality(ctx, opt.seed); });
        else if (s == "highest")
            tasks.emplace_back([&ctx] { return check_highest_components(ctx); });
    }

    std::vector<CheckReport> reports;
    const std::size_t cap = thread_cap();
    if (cap <= 1 || tasks.size() <= 1) {
        for (auto& t : tasks) {
            auto part = t();
            reports.insert(reports.end(), part.begin(), part.end());
        }
    } else {
        std::size_t next = 0;
        while (next < tasks.size()) {
            std::vector<std::future<std::vector<CheckReport>>> batch;
            for (std::size_t k = 0; k < cap && next < tasks.size(); ++k, ++next)
                batch.push_back(std::async(std::launch::async, tasks[next]));
            for (auto& f : batch) {
                auto part = f.get();
                reports.insert(reports.end(), part.begin(), part.end());
            }
        }
    }
    return reports;
}

int exit_code_for(const std::vector<CheckReport>& reports) {
    bool any_fail = false, any_inconclusive = false;
    for (const auto& r : reports) {
        if (r.status == CheckStatus::fail) any_fail = true;
        if (r.status == CheckStatus::inconclusive) any_inconclusive = true;
    }
    if (any_fail) return kExitFail;
    if (any_inconclusive) return kExitInconclusive;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with the contraction b x (u^-)^a of a classical simple Lie "
                 "algebra: structure, invariants, verification suites"};
    app.require_subcommand(1);

    std::string family_str, out_path, mode_str = "auto";
    int rank = 0;
    std::uint64_t seed = 0;
    int samples = 25;
    std::string suites_csv = "all";

    auto add_spec_flags = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_str, "family letter: A, B, C or D")->required();
        cmd->add_option("--rank", rank, "rank l")->required();
        cmd->add_option("--out", out_path, "output file (stdout when omitted)");
    };

    auto* build_cmd = app.add_subcommand("build", "construct the algebra and emit basis/root data");
    add_spec_flags(build_cmd);

    auto* inv_cmd = app.add_subcommand("invariants", "emit the basic and contracted invariants");
    add_spec_flags(inv_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_spec_flags(verify_cmd);
    verify_cmd->add_option("--mode", mode_str, "symbolic, sampled or auto (default auto)");
    verify_cmd->add_option("--seed", seed, "sampling seed (default 0)");
    verify_cmd->add_option("--samples", samples, "sample count per sampled check (default 25)");
    verify_cmd->add_option("--suites", suites_csv,
                           "comma list: structure,invariance,index,regularity,nullcone,highest,all");

    auto* index_cmd = app.add_subcommand("index", "estimate the index from Kirillov ranks");
    add_spec_flags(index_cmd);
    index_cmd->add_option("--seed", seed, "sampling seed (default 0)");
    index_cmd->add_option("--samples", samples, "sample count per batch (default 25)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostream& os = e.get_exit_code() == 0 ? std::cout : std::cerr;
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return kExitPass;
        }
        os << e.what() << "\n\n" << app.help() << std::flush;
        return kExitUsage;
    }

    try {
        if (family_str.size() != 1) throw UnsupportedFamily("family must be a single letter A-D");
        AlgebraSpec spec{family_from_letter(family_str[0]), rank};

        if (build_cmd->parsed()) {
            Algebra alg = build_algebra(spec);
            emit(algebra_json(alg), out_path);
            return kExitPass;
        }
        if (inv_cmd->parsed()) {
            SpecContext ctx(spec);
            emit(invariants_json(ctx.alg, ctx.invariants()), out_path);
            return kExitPass;
        }
        if (index_cmd->parsed()) {
            Algebra alg = build_algebra(spec);
            auto est = index_estimate(alg, samples, seed);
            ordered_json j;
            j["spec"] = spec_json(spec);
            j["seed"] = seed;
            j["samples"] = samples;
            j["index"] = est.index;
            j["max_rank"] = est.max_rank;
            j["conclusive"] = est.conclusive;
            emit(j, out_path);
            return est.conclusive ? kExitPass : kExitInconclusive;
        }
        // verify
        VerifyOptions opt;
        opt.mode = parse_mode(mode_str);
        opt.seed = seed;
        opt.samples = samples;
        {
            std::string cur;
            for (char c : suites_csv) {
                if (c == ',') {
                    if (!cur.empty()) opt.suites.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!cur.empty()) opt.suites.push_back(cur);
        }
        SpecContext ctx(spec);
        auto reports = run_suites(ctx, opt);
        emit(report_json(spec, to_string(resolve_mode(spec, opt.mode)), seed, reports), out_path);
        return exit_code_for(reports);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
