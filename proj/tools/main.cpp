// Command-line front end: gadget verification, Ramsey decisions, sampling,
// family/moment reports, and threshold scans, with machine-readable output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur/decider.hpp"
#include "schur/errors.hpp"
#include "schur/family.hpp"
#include "schur/moments.hpp"
#include "schur/perturb.hpp"
#include "schur/scan.hpp"
#include "schur/set_io.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace schur;

TriplePolicy parse_policy(const std::string& s) {
    if (s == "schur") return TriplePolicy::Schur;
    if (s == "weak-schur") return TriplePolicy::WeakSchur;
    throw CLI::ValidationError("--policy", "expected 'schur' or 'weak-schur'");
}

std::string policy_name(TriplePolicy p) {
    return p == TriplePolicy::Schur ? "schur" : "weak-schur";
}

json coloring_json(const TwoColoring& col) {
    return json{{"red", col.members_with(Color::Red)}, {"blue", col.members_with(Color::Blue)}};
}

json gadget_json(const GadgetSpec& g) {
    return json{{"x", g.x},
                {"y", g.y},
                {"d", g.d},
                {"n", g.n},
                {"tuple", g.tuple},
                {"values", g.values},
                {"schur_part", {g.schur_part.a, g.schur_part.b, g.schur_part.c}}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail_with(const std::string& kind, const std::string& message) {
    print_json(json{{"error", kind}, {"message", message}});
    return 1;
}

struct GlobalOpts {
    std::string policy = "schur";
    std::uint64_t seed = 0;
    bool as_json = false;
};

void cmd_verify_gadget(int x, int y, int d, int n, TriplePolicy policy) {
    const GadgetSpec g = build_gadget(x, y, d, n);
    const GadgetVerdict v = verify_gadget_ramsey(g, policy);
    json out = gadget_json(g);
    out["policy"] = policy_name(policy);
    out["is_ramsey"] = v.is_ramsey;
    out["colorings_checked"] = v.colorings_checked;
    out["counterexample"] = v.counterexample ? coloring_json(*v.counterexample) : json(nullptr);
    print_json(out);
}

void cmd_decide(const std::string& set_file, TriplePolicy policy, std::uint64_t budget) {
    const IntegerSet s = read_set_file(set_file);
    const DecideResult r = decide_with_budget(s, policy, budget);
    json out;
    out["n"] = s.ground_size();
    out["set_size"] = s.size();
    out["policy"] = policy_name(policy);
    out["budget"] = budget;
    out["verdict"] = r.verdict == RamseyVerdict::Ramsey      ? "ramsey"
                     : r.verdict == RamseyVerdict::NotRamsey ? "not_ramsey"
                                                             : "budget_exceeded";
    out["witness"] = r.witness ? coloring_json(*r.witness) : json(nullptr);
    out["stats"] = json{{"nodes_expanded", r.stats.nodes_expanded},
                        {"propagations", r.stats.propagations},
                        {"max_depth", r.stats.max_depth}};
    print_json(out);
}

void cmd_sample(int n, double p, std::uint64_t seed, std::uint64_t index,
                const std::string& out_path) {
    const IntegerSet s = sample_np(SampleSpec{n, p, seed, index});
    if (out_path.empty())
        write_set(std::cout, s);
    else
        write_set_file(out_path, s);
}

void cmd_popular_steps(const std::string& set_file, const std::string& eps_text) {
    const IntegerSet a = read_set_file(set_file);
    const PopularSteps ps = popular_steps(a, Rational::parse(eps_text));
    json counts = json::array();
    for (const auto& [d, cnt] : ps.per_step_counts) counts.push_back(json::array({d, cnt}));
    print_json(json{{"n", ps.n},
                    {"epsilon", ps.epsilon.str()},
                    {"threshold", static_cast<double>(ps.epsilon.value() * ps.n)},
                    {"steps", ps.steps},
                    {"per_step_counts", counts}});
}

void cmd_family(const std::string& set_file, const std::string& eps_text, bool emit_witnesses,
                const std::string& out_path) {
    const IntegerSet a = read_set_file(set_file);
    const TripleFamily fam = build_triple_family(a, Rational::parse(eps_text), emit_witnesses);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write: " + out_path);
        out = &file;
    }
    if (emit_witnesses) {
        *out << "a,b,c,x,y,d\n";
        for (std::size_t i = 0; i < fam.triples.size(); ++i)
            for (const GadgetParams& w : fam.witnesses[i])
                *out << fam.triples[i].a << ',' << fam.triples[i].b << ',' << fam.triples[i].c
                     << ',' << w.x << ',' << w.y << ',' << w.d << "\n";
    } else {
        *out << "a,b,c,witnesses\n";
        for (std::size_t i = 0; i < fam.triples.size(); ++i)
            *out << fam.triples[i].a << ',' << fam.triples[i].b << ',' << fam.triples[i].c << ','
                 << fam.witness_counts[i] << "\n";
    }
}

void cmd_find_gadget(const std::string& a_file, const std::string& u_file,
                     const std::string& eps_text, std::uint64_t budget) {
    const IntegerSet a = read_set_file(a_file);
    const IntegerSet u = read_set_file(u_file);
    const GadgetSearchResult r =
        find_gadget_in_perturbed(a, u, Rational::parse(eps_text), budget);
    json out;
    out["status"] = r.status == GadgetSearchStatus::Found      ? "found"
                    : r.status == GadgetSearchStatus::NotFound ? "not_found"
                                                               : "budget_exceeded";
    out["probes"] = r.probes;
    out["gadget"] = r.gadget ? gadget_json(*r.gadget) : json(nullptr);
    print_json(out);
}

void cmd_moments(const std::string& set_file, const std::string& eps_text, double p,
                 bool exact_digits) {
    const IntegerSet a = read_set_file(set_file);
    const TripleFamily fam = build_triple_family(a, Rational::parse(eps_text), false);
    const MomentReport rep = chebyshev_zero_bound(fam, p);
    json out;
    out["n"] = rep.n;
    out["epsilon"] = rep.epsilon.str();
    out["p"] = rep.p;
    out["family_size"] = rep.family_size;
    out["pairs_share1"] = rep.pairs_share1;
    out["pairs_share2"] = rep.pairs_share2;
    auto num = [exact_digits](long double v) -> json {
        if (!exact_digits) return json(static_cast<double>(v));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.21Lg", v);
        return json(std::string(buf));
    };
    out["expected"] = num(rep.expected);
    out["cross_term"] = num(rep.cross_term);
    out["cheb_bound"] = num(rep.cheb_bound);
    out["expected_lower_ref"] = num(rep.expected_lower_ref);
    print_json(out);
}

void cmd_scan(const ScanConfig& cfg, const std::string& out_csv, const std::string& out_plot,
              bool as_json) {
    const std::vector<ScanRow> rows = run_scan(cfg);
    if (!out_csv.empty())
        emit_csv(rows, out_csv);
    else if (!as_json)
        emit_csv(rows, std::cout);
    if (as_json) {
        json arr = json::array();
        for (const ScanRow& r : rows)
            arr.push_back(json{{"c", r.c},
                               {"p", r.p},
                               {"frac_gadget_found", r.frac_gadget_found},
                               {"frac_lower_valid", r.frac_lower_valid},
                               {"mean_capture", r.mean_capture},
                               {"cheb_bound", r.cheb_bound},
                               {"m", r.m},
                               {"budget_exceeded_samples", r.budget_exceeded_samples}});
        print_json(arr);
    }
    if (!out_plot.empty()) {
        std::string csv_name = out_csv.empty() ? "scan.csv" : out_csv;
        const auto slash = csv_name.find_last_of('/');
        if (slash != std::string::npos) csv_name = csv_name.substr(slash + 1);
        emit_plot_script(rows, csv_name, out_plot);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur-triple Ramsey experiments on randomly perturbed integer sets"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--policy", g.policy, "Triple policy: schur | weak-schur");
    app.add_option("--seed", g.seed, "Master seed for sampling commands");
    app.add_flag("--json", g.as_json, "Prefer JSON output where applicable");

    // verify-gadget
    int vx = 0, vy = 0, vd = 0, vn = 0;
    auto* verify = app.add_subcommand("verify-gadget", "Exhaustively verify a 10-tuple gadget");
    verify->add_option("--x", vx)->required();
    verify->add_option("--y", vy)->required();
    verify->add_option("--d", vd)->required();
    verify->add_option("--n", vn)->required();

    // decide
    std::string decide_file;
    std::uint64_t decide_budget = 1000000000000ull;
    auto* decide = app.add_subcommand("decide", "Decide 2-Schur-Ramsey for a set file");
    decide->add_option("--set-file", decide_file)->required();
    decide->add_option("--budget", decide_budget, "Node budget for the search");

    // sample
    int sample_n = 0;
    double sample_p = 0.0;
    std::uint64_t sample_index = 0;
    std::string sample_out;
    auto* sample = app.add_subcommand("sample", "Draw a reproducible [n]_p sample");
    sample->add_option("--n", sample_n)->required();
    sample->add_option("--p", sample_p)->required();
    sample->add_option("--index", sample_index, "Sample counter within the seed's stream");
    sample->add_option("--out", sample_out, "Write the set here instead of stdout");

    // popular-steps
    std::string ps_file, ps_eps;
    auto* ps = app.add_subcommand("popular-steps", "Report D_eps(A) for a set file");
    ps->add_option("--set-file", ps_file)->required();
    ps->add_option("--epsilon", ps_eps)->required();

    // family
    std::string fam_file, fam_eps, fam_out;
    bool fam_witnesses = false;
    auto* fam = app.add_subcommand("family", "Emit the Schur-triple family as CSV");
    fam->add_option("--set-file", fam_file)->required();
    fam->add_option("--epsilon", fam_eps)->required();
    fam->add_flag("--emit-witnesses", fam_witnesses, "One row per witness (x, y, d)");
    fam->add_option("--out", fam_out, "Write CSV here instead of stdout");

    // find-gadget
    std::string fg_a, fg_u, fg_eps;
    std::uint64_t fg_budget = 100000000ull;
    auto* fg = app.add_subcommand("find-gadget", "Search U = A ∪ R for a contained gadget");
    fg->add_option("--a-file", fg_a)->required();
    fg->add_option("--u-file", fg_u)->required();
    fg->add_option("--epsilon", fg_eps)->required();
    fg->add_option("--budget", fg_budget, "Witness-validation budget");

    // moments
    std::string mo_file, mo_eps;
    double mo_p = 0.0;
    bool mo_exact = false;
    auto* mo = app.add_subcommand("moments", "Second-moment report for a set's family");
    mo->add_option("--set-file", mo_file)->required();
    mo->add_option("--epsilon", mo_eps)->required();
    mo->add_option("--p", mo_p)->required();
    mo->add_flag("--exact", mo_exact, "Print full extended precision");

    // scan
    std::string scan_config_path, scan_base = "half-interval", scan_base_file, scan_eps = "0.1";
    std::string scan_out_csv, scan_out_plot;
    int scan_n = 0, scan_samples = 1;
    std::vector<double> scan_grid;
    std::uint64_t scan_budget = 100000000ull;
    auto* scan = app.add_subcommand("scan", "Monte Carlo threshold scan over a c grid");
    scan->add_option("--config", scan_config_path, "JSON config file (overrides other flags)");
    scan->add_option("--n", scan_n);
    scan->add_option("--base", scan_base, "half-interval | full | file");
    scan->add_option("--base-file", scan_base_file);
    scan->add_option("--epsilon", scan_eps);
    scan->add_option("--c", scan_grid, "Grid values c with p = c*n^(-2/3)");
    scan->add_option("--samples", scan_samples);
    scan->add_option("--work-budget", scan_budget);
    scan->add_option("--out-csv", scan_out_csv);
    scan->add_option("--out-plot", scan_out_plot);

    CLI11_PARSE(app, argc, argv);

    try {
        const TriplePolicy policy = parse_policy(g.policy);
        if (verify->parsed()) {
            cmd_verify_gadget(vx, vy, vd, vn, policy);
        } else if (decide->parsed()) {
            cmd_decide(decide_file, policy, decide_budget);
        } else if (sample->parsed()) {
            cmd_sample(sample_n, sample_p, g.seed, sample_index, sample_out);
        } else if (ps->parsed()) {
            cmd_popular_steps(ps_file, ps_eps);
        } else if (fam->parsed()) {
            cmd_family(fam_file, fam_eps, fam_witnesses, fam_out);
        } else if (fg->parsed()) {
            cmd_find_gadget(fg_a, fg_u, fg_eps, fg_budget);
        } else if (mo->parsed()) {
            cmd_moments(mo_file, mo_eps, mo_p, mo_exact);
        } else if (scan->parsed()) {
            ScanConfig cfg;
            if (!scan_config_path.empty()) {
                std::ifstream in(scan_config_path);
                if (!in) throw std::runtime_error("cannot open config: " + scan_config_path);
                cfg = parse_scan_config(in);
            } else {
                cfg.n = scan_n;
                if (scan_base == "half-interval")
                    cfg.base = BaseSource::HalfInterval;
                else if (scan_base == "full")
                    cfg.base = BaseSource::Full;
                else if (scan_base == "file")
                    cfg.base = BaseSource::File;
                else
                    throw std::invalid_argument("base must be half-interval, full, or file");
                cfg.base_file = scan_base_file;
                cfg.epsilon = Rational::parse(scan_eps);
                cfg.c_grid = scan_grid;
                cfg.samples = scan_samples;
                cfg.policy = policy;
                cfg.master_seed = g.seed;
                cfg.work_budget = scan_budget;
            }
            cmd_scan(cfg, scan_out_csv, scan_out_plot, g.as_json);
        }
    } catch (const ConstraintViolation& e) {
        return fail_with("ConstraintViolation", e.what());
    } catch (const OutOfRange& e) {
        return fail_with("OutOfRange", e.what());
    } catch (const DegenerateFamily& e) {
        return fail_with("DegenerateFamily", e.what());
    } catch (const std::exception& e) {
        return fail_with("Error", e.what());
    }
    return 0;
}
