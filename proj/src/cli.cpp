#include "diskdecomp/cli.hpp"

#include "diskdecomp/decomp.hpp"
#include "diskdecomp/error.hpp"
#include "diskdecomp/json_io.hpp"
#include "diskdecomp/robustness.hpp"
#include "diskdecomp/svg.hpp"
#include "diskdecomp/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <istream>
#include <ostream>

namespace diskdecomp {

namespace {

struct Options {
    double tol = kDefaultTol;
    std::string input;
    std::uint64_t cap = kDefaultEnumerationCap;

    bool all = false;
    Level n = 0;
    bool minimal = false;
    bool max_base = false;
    bool realize = false;
    std::string svg;

    std::size_t N = 0;
    PerturbationSpec perturbation;
};

void emit(std::ostream& out, const Json& j)
{
    out << j.dump() << '\n';
}

int analyze(const Options& o, std::ostream& out)
{
    const CanonicalFunction c = canonicalize(parse_sequence(o.input));
    emit(out, stats_json(c, o.cap));
    return kExitOk;
}

int count(const Options& o, std::ostream& out)
{
    const CanonicalFunction c = canonicalize(parse_sequence(o.input));
    emit(out, Json{{"seq", c.values()}, {"robust_count", count_json(count_robust(c, o.cap))}});
    return kExitOk;
}

int decompose(const Options& o, std::ostream& out)
{
    const CanonicalFunction c = canonicalize(parse_sequence(o.input));
    const BoundaryLayout layout = default_layout(c);

    if (o.all) {
        const auto all = enumerate_robust(c, layout, o.cap);
        Json items = Json::array();
        for (const auto& d : all) {
            items.push_back(decomposition_json(d, o.realize));
        }
        if (!o.svg.empty() && !all.empty()) {
            write_svg(realize(all.front()), o.svg, o.tol);
        }
        emit(out, Json{{"seq", c.values()},
                       {"mode", "all"},
                       {"count", all.size()},
                       {"decompositions", items}});
        return kExitOk;
    }

    CombinatorialDecomposition d;
    std::string mode;
    if (o.minimal) {
        d = minimal_base_decomposition(c, layout);
        mode = "minimal";
    } else if (o.max_base) {
        d = max_base_decomposition(c, layout);
        mode = "max-base";
    } else {
        d = generate_for_n(c, layout, o.n);
        mode = "n";
    }
    if (!o.svg.empty()) {
        write_svg(realize(d), o.svg, o.tol);
    }
    // Flat layout: with --realize the document is itself a configuration.
    Json j = decomposition_json(d, o.realize);
    j["seq"] = c.values();
    j["mode"] = mode;
    emit(out, j);
    return kExitOk;
}

int forward(const Options& o, std::istream& in, std::ostream& out)
{
    const Json doc = load_json(o.input, in);
    // The output of `decompose --all --realize` is accepted as well.
    if (doc.is_object() && doc.contains("decompositions") && !doc.contains("landmarks")) {
        Json seqs = Json::array();
        for (const Json& item : doc.at("decompositions")) {
            seqs.push_back(sequence_json(seq(configuration_from_json(item), o.tol)).at("seq"));
        }
        emit(out, Json{{"seqs", seqs}});
        return kExitOk;
    }
    emit(out, sequence_json(seq(configuration_from_json(doc), o.tol)));
    return kExitOk;
}

int check(const Options& o, std::istream& in, std::ostream& out)
{
    const Configuration cfg = load_configuration(o.input, in);
    const RobustnessVerdict verdict = is_robust(cfg, o.tol);
    Json j = verdict_json(verdict);
    const UscVerdict usc = is_properly_usc(cfg, o.tol);
    j["properly_usc"] = usc.properly_usc;
    j["maximizes_dof"] = maximizes_dof(cfg, o.tol);
    if (o.N > 0) {
        j["dof"] = dof_json(dof(cfg, o.N, o.tol));
    }
    emit(out, j);
    return verdict.robust ? kExitOk : kExitNegative;
}

int perturb(const Options& o, std::istream& in, std::ostream& out)
{
    const Configuration cfg = load_configuration(o.input, in);
    const PerturbationReport report = perturb_trial(cfg, o.perturbation, o.tol);
    emit(out, report_json(report));
    return report.all_equal ? kExitOk : kExitNegative;
}

int render(const Options& o, std::istream& in, std::ostream& out)
{
    const Configuration cfg = load_configuration(o.input, in);
    write_svg(cfg, o.svg, o.tol);
    emit(out, Json{{"svg", o.svg}, {"landmarks", cfg.size()}});
    return kExitOk;
}

void error_line(std::ostream& err, const std::string& message)
{
    err << Json{{"error", message}}.dump() << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err)
{
    Options o;
    CLI::App app{"Decompose landmark-count functions on S1 into disk indicators", "diskdecomp"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--tol", o.tol, "Geometric tolerance")->check(CLI::PositiveNumber);

    auto* an = app.add_subcommand("analyze", "Invariants and counts of a sequence class");
    an->add_option("seq", o.input, "Comma-separated naturals")->required();
    an->add_option("--cap", o.cap, "Largest L! to enumerate");

    auto* co = app.add_subcommand("count", "Number of robust decompositions");
    co->add_option("seq", o.input, "Comma-separated naturals")->required();
    co->add_option("--cap", o.cap, "Largest L! to enumerate");

    auto* de = app.add_subcommand("decompose", "Robust decompositions of a sequence class");
    de->add_option("seq", o.input, "Comma-separated naturals")->required();
    auto* modes = de->add_option_group("mode");
    modes->add_flag("--all", o.all, "Every robust decomposition");
    modes->add_option("--n", o.n, "Exactly this many signals");
    modes->add_flag("--minimal", o.minimal, "Fewest full-circle signals");
    modes->add_flag("--max-base", o.max_base, "Most full-circle signals");
    modes->require_option(1);
    de->add_flag("--realize", o.realize, "Include realized landmarks");
    de->add_option("--svg", o.svg, "Draw the (first) realized decomposition");
    de->add_option("--cap", o.cap, "Largest L! to enumerate");

    auto* fw = app.add_subcommand("forward", "Sequence representation of a configuration");
    fw->add_option("config", o.input, "Configuration JSON file, or - for stdin")->required();

    auto* ch = app.add_subcommand("check", "Robustness verdict; exit 0 iff robust");
    ch->add_option("config", o.input, "Configuration JSON file, or - for stdin")->required();
    ch->add_option("--N", o.N, "Landmark budget for the degrees-of-freedom report");

    auto* pe = app.add_subcommand("perturb", "Seeded random perturbation trials");
    pe->add_option("config", o.input, "Configuration JSON file, or - for stdin")->required();
    pe->add_option("--eps", o.perturbation.epsilon, "Perturbation size")
        ->check(CLI::PositiveNumber);
    pe->add_option("--trials", o.perturbation.trials, "Number of trials")
        ->check(CLI::PositiveNumber);
    pe->add_option("--seed", o.perturbation.seed, "Base seed");

    auto* re = app.add_subcommand("render", "Draw a configuration as SVG");
    re->add_option("config", o.input, "Configuration JSON file, or - for stdin")->required();
    re->add_option("--svg", o.svg, "Output path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        error_line(err, e.what());
        return kExitInput;
    }

    try {
        if (an->parsed()) {
            return analyze(o, out);
        }
        if (co->parsed()) {
            return count(o, out);
        }
        if (de->parsed()) {
            return decompose(o, out);
        }
        if (fw->parsed()) {
            return forward(o, in, out);
        }
        if (ch->parsed()) {
            return check(o, in, out);
        }
        if (pe->parsed()) {
            return perturb(o, in, out);
        }
        return render(o, in, out);
    } catch (const FormatError& e) {
        error_line(err, e.what());
        return kExitInput;
    } catch (const Error& e) {
        error_line(err, e.what());
        return kExitNegative;
    }
}

} // namespace diskdecomp
