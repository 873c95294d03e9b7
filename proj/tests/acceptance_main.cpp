// Acceptance suite: one pass/fail line per criterion. Every tolerance is
// pinned here in code; exit status is the number of failed criteria.
//
// Usage: acceptance <path-to-schurtool> [--pilot-a6]

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schur/decider.hpp"
#include "schur/family.hpp"
#include "schur/gadget.hpp"
#include "schur/moments.hpp"
#include "schur/perturb.hpp"
#include "schur/scan.hpp"
#include "schur/set_io.hpp"

using namespace schur;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
    std::printf("[%s] A%d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------- A1
void criterion1() {
    long long instances = 0, schur_bad = 0, weak_bad = 0, weak_bad_distinct = 0;
    std::string first_weak_bad;
    for (int d = 1; d <= 29; ++d) {
        for (int x = d + 1; x + d + 1 <= 60; ++x) {
            for (int y = x + d + 1; y <= 60; ++y) {
                const GadgetSpec g = build_gadget(x, y, d, 200);
                ++instances;
                if (!verify_gadget_ramsey(g, TriplePolicy::Schur).is_ramsey) ++schur_bad;
                if (!verify_gadget_ramsey(g, TriplePolicy::WeakSchur).is_ramsey) {
                    ++weak_bad;
                    if (g.values.size() == 10) ++weak_bad_distinct;
                    if (first_weak_bad.empty())
                        first_weak_bad = "x=" + std::to_string(x) + ",y=" + std::to_string(y) +
                                         ",d=" + std::to_string(d);
                }
            }
        }
    }
    const bool pass = schur_bad == 0 && weak_bad == 0;
    std::string detail = std::to_string(instances) + " instances; schur exceptions " +
                         std::to_string(schur_bad) + "; weak-schur exceptions " +
                         std::to_string(weak_bad);
    if (weak_bad > 0)
        detail += " (value-coincident tuples only: " + std::to_string(weak_bad_distinct) +
                  " with distinct values; first " + first_weak_bad +
                  "); all distinct-value instances pass both policies";
    report(1, pass, "gadget sweep is 2-Schur-Ramsey under both policies", detail);
}

// ---------------------------------------------------------------- A2
void criterion2() {
    long long mismatches = 0, checked = 0;
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
        const IntegerSet s = oracles::set_from_mask(12, mask);
        for (TriplePolicy pol : {TriplePolicy::Schur, TriplePolicy::WeakSchur}) {
            ++checked;
            if (is_two_schur_ramsey(s, pol) != oracles::brute_is_ramsey(mask, pol)) ++mismatches;
        }
    }
    std::mt19937_64 rng(16161616);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::uint32_t mask = static_cast<std::uint32_t>(rng()) & 0xffffu;
        const IntegerSet s = oracles::set_from_mask(16, mask);
        for (TriplePolicy pol : {TriplePolicy::Schur, TriplePolicy::WeakSchur}) {
            ++checked;
            if (is_two_schur_ramsey(s, pol) != oracles::brute_is_ramsey(mask, pol)) ++mismatches;
        }
    }
    const auto schur_prefix = smallest_ramsey_prefix(TriplePolicy::Schur, 10);
    const auto weak_prefix = smallest_ramsey_prefix(TriplePolicy::WeakSchur, 12);
    const bool anchors = schur_prefix == 5 && weak_prefix == 9;
    report(2, mismatches == 0 && anchors, "decider matches exhaustive enumeration",
           std::to_string(checked) + " decisions, " + std::to_string(mismatches) +
               " mismatches; smallest Ramsey prefixes " +
               std::to_string(schur_prefix.value_or(-1)) + " (schur) and " +
               std::to_string(weak_prefix.value_or(-1)) + " (weak-schur)");
}

// ---------------------------------------------------------------- A3
void criterion3() {
    std::mt19937_64 rng(333);
    long long bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 197);
        const IntegerSet s = oracles::random_subset(n, 0.2 + 0.6 * (trial % 7) / 6.0, rng);
        const auto mine = enumerate_4aps(s);
        if (mine != oracles::quad_loop_4aps(s)) ++bad;
        long long total = 0;
        for (const auto& [d, c] : count_4aps_by_step(s)) {
            (void)d;
            total += c;
        }
        if (total != static_cast<long long>(mine.size())) ++bad;
    }
    long long interval_bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 10 + static_cast<int>(rng() % 191);
        const int lo = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        const int hi = lo + static_cast<int>(rng() % static_cast<unsigned>(n - lo + 1));
        const IntegerSet s = IntegerSet::interval(n, lo, hi);
        const long long len = hi - lo + 1;
        long long total = 0;
        for (const auto& [d, c] : count_4aps_by_step(s)) {
            if (c != len - 3 * d) ++interval_bad;
            total += c;
        }
        if (total != oracles::interval_4ap_count(len)) ++interval_bad;
    }
    report(3, bad == 0 && interval_bad == 0, "4AP counting matches oracle and closed form",
           "500 random sets (" + std::to_string(bad) + " bad), 100 intervals (" +
               std::to_string(interval_bad) + " bad)");
}

// ---------------------------------------------------------------- A4
void criterion4() {
    bool pass = true;
    std::string detail;
    for (const int n : {200, 500}) {
        const Rational eps = Rational::parse("0.1");
        const IntegerSet a = IntegerSet::full(n);
        const FamilyBoundReport rep = family_size_bound_check(a, eps);
        const TripleFamily fam = build_triple_family(a, eps, false);
        const OverlapProfile brute = overlap_profile(fam);
        const OverlapProfile join = overlap_profile_bucketed(fam);
        const bool routes_agree = brute.pairs_share1 == join.pairs_share1 &&
                                  brute.pairs_share2 == join.pairs_share2 &&
                                  brute.pairs_by_union_size == join.pairs_by_union_size;
        const bool ok = rep.holds_hypothesis && rep.meets_bound && brute.share1_within_cubic &&
                        brute.share2_within_quadratic && routes_agree;
        pass = pass && ok;
        detail += "n=" + std::to_string(n) + ": |T|=" + std::to_string(rep.family_size) +
                  " >= " + fmt(static_cast<double>(rep.bound)) +
                  ", share1=" + std::to_string(brute.pairs_share1) +
                  ", share2=" + std::to_string(brute.pairs_share2) +
                  (routes_agree ? ", routes agree" : ", ROUTES DISAGREE") +
                  (n == 200 ? "; " : "");
    }
    report(4, pass, "family bound and overlap profile", detail);
}

// ---------------------------------------------------------------- A5
void criterion5() {
    const IntegerSet a = IntegerSet::full(40);
    const TripleFamily fam = build_triple_family(a, Rational::parse("0.1"), false);
    const OverlapProfile prof = overlap_profile(fam);
    bool pass = true;
    std::string detail;
    for (const double p : {0.1, 0.2, 0.3}) {
        const int reps = 100000;
        long double sum = 0, sumsq = 0;
        long long zeros = 0;
        for (int i = 0; i < reps; ++i) {
            const IntegerSet r =
                sample_np(SampleSpec{40, p, 4242, static_cast<std::uint64_t>(i)});
            long long captured = 0;
            for (const SchurTriple& t : fam.triples)
                if (r.contains(t.a) && r.contains(t.b) && r.contains(t.c)) ++captured;
            sum += captured;
            sumsq += static_cast<long double>(captured) * captured;
            if (captured == 0) ++zeros;
        }
        const long double mean = sum / reps;
        const long double se = sqrtl(((sumsq - sum * sum / reps) / (reps - 1)) / reps);
        const MomentReport rep = chebyshev_zero_bound(fam, p, prof);
        const bool mean_ok = fabsl(mean - rep.expected) <= 3 * se;
        const long double zrate = static_cast<long double>(zeros) / reps;
        const long double zse = sqrtl(zrate * (1 - zrate) / reps);
        const bool zero_ok = rep.cheb_bound >= 1 || zrate <= rep.cheb_bound + 3 * zse;
        pass = pass && mean_ok && zero_ok;
        detail += "p=" + fmt(p) + ": mean " + fmt(static_cast<double>(mean)) + " vs E " +
                  fmt(static_cast<double>(rep.expected)) + " (3se " +
                  fmt(static_cast<double>(3 * se)) + "), Pr0 " + fmt(static_cast<double>(zrate)) +
                  " cheb " + fmt(static_cast<double>(rep.cheb_bound)) + "; ";
    }
    report(5, pass, "second moment vs simulation on [40]", detail);
}

// ---------------------------------------------------------------- A6
const std::uint64_t kScanSeed = 20260810;

ScanConfig a6_config() {
    ScanConfig cfg;
    cfg.n = 2000;
    cfg.base = BaseSource::HalfInterval;
    cfg.epsilon = Rational::parse("0.1");
    cfg.c_grid = {0.25, 0.5, 1, 2, 4, 8, 16, 32};
    cfg.samples = 200;
    cfg.master_seed = kScanSeed;
    cfg.work_budget = 1000000000ull;
    return cfg;
}

// Regression values frozen from the pilot run of a6_config() (seed above).
const std::array<double, 8> kFrozenGadget = {0, 0.005, 0.02, 0.175, 0.75, 1, 1, 1};
const std::array<double, 8> kFrozenLower = {1, 0.98, 0.955, 0.66, 0.085, 0, 0, 0};
const int kFrozenGadgetCrossLow = 3;   // frac_gadget_found crosses 1/2 between
const int kFrozenGadgetCrossHigh = 4;  // these grid indices (c = 2 and c = 4)

bool trend_ok(const std::vector<double>& f, int m, bool nonincreasing) {
    int inversions = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const double delta = nonincreasing ? f[i + 1] - f[i] : f[i] - f[i + 1];
        if (delta <= 0) continue;  // monotone step
        const double se =
            std::sqrt((f[i] * (1 - f[i]) + f[i + 1] * (1 - f[i + 1])) / m) + 1.0 / m;
        if (delta > 2 * se) return false;
        ++inversions;
    }
    return inversions <= 1;
}

void criterion6(bool pilot) {
    const ScanConfig cfg = a6_config();
    const std::vector<ScanRow> rows = run_scan(cfg);
    if (pilot) {
        emit_csv(rows, std::cout);
        return;
    }
    std::vector<double> fg, fl;
    for (const ScanRow& r : rows) {
        fg.push_back(r.frac_gadget_found);
        fl.push_back(r.frac_lower_valid);
    }
    std::uint64_t budget_exceeded = 0;
    for (const ScanRow& r : rows) budget_exceeded += r.budget_exceeded_samples;

    const bool endpoints =
        fl.front() >= 0.95 && fl.back() <= 0.05 && fg.front() <= 0.05 && fg.back() >= 0.95;
    const bool trends = trend_ok(fl, cfg.samples, true) && trend_ok(fg, cfg.samples, false);

    bool regression = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto tol = [&](double frozen) {
            return 2 * std::sqrt(std::max(frozen * (1 - frozen), 0.0) / cfg.samples) +
                   2.0 / cfg.samples;
        };
        if (std::abs(fg[i] - kFrozenGadget[i]) > tol(kFrozenGadget[i])) regression = false;
        if (std::abs(fl[i] - kFrozenLower[i]) > tol(kFrozenLower[i])) regression = false;
    }
    // The gadget series crosses 1/2 inside the frozen bracket.
    int lo = -1;
    for (std::size_t i = 0; i + 1 < fg.size(); ++i)
        if (fg[i] < 0.5 && fg[i + 1] >= 0.5) lo = static_cast<int>(i);
    const bool crossing = lo == kFrozenGadgetCrossLow && lo + 1 == kFrozenGadgetCrossHigh;

    std::string detail = "gadget [";
    for (double v : fg) detail += fmt(v) + " ";
    detail += "], lower [";
    for (double v : fl) detail += fmt(v) + " ";
    detail += "], budget exceedances " + std::to_string(budget_exceeded);
    report(6, endpoints && trends && regression && crossing && budget_exceeded == 0,
           "threshold scan at n=2000", detail);
}

// ---------------------------------------------------------------- A7
void criterion7() {
    const int n = 1000;
    const double p = 0.1 * std::pow(static_cast<double>(n), -2.0 / 3.0);
    const IntegerSet a = half_interval(n);
    int valid = 0;
    for (int i = 0; i < 100; ++i) {
        const IntegerSet u =
            perturbed_union(a, sample_np(SampleSpec{n, p, 7777, static_cast<std::uint64_t>(i)}));
        const TwoColoring col = lower_bound_coloring(a, u);
        if (!verify_coloring(u, col, TriplePolicy::Schur).has_value()) ++valid;
    }
    report(7, valid >= 95, "lower-bound coloring at n=1000",
           std::to_string(valid) + "/100 samples Schur-free at p=0.1*n^(-2/3)");
}

// ---------------------------------------------------------------- A8
std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion8(const std::string& tool) {
    if (std::system("mkdir -p acceptance_tmp") != 0) {
        report(8, false, "subcommand determinism", "cannot create scratch directory");
        return;
    }
    const std::string dir = "acceptance_tmp/";
    if (std::system((tool + " sample --n 60 --p 0.4 --seed 11 --index 2 --out " + dir +
                     "base.txt > /dev/null")
                        .c_str()) != 0 ||
        std::system((tool + " sample --n 60 --p 0.8 --seed 11 --index 3 --out " + dir +
                     "u.txt > /dev/null")
                        .c_str()) != 0) {
        report(8, false, "subcommand determinism", "could not create fixture sets");
        return;
    }
    // find-gadget needs A ⊆ U; replace u.txt with the union.
    {
        const IntegerSet a = read_set_file(dir + "base.txt");
        const IntegerSet r = read_set_file(dir + "u.txt");
        write_set_file(dir + "u.txt", perturbed_union(a, r));
    }

    const std::vector<std::pair<std::string, std::string>> cases = {
        {"verify-gadget", tool + " verify-gadget --x 4 --y 20 --d 1 --n 21 --policy weak-schur"},
        {"decide", tool + " decide --set-file " + dir + "base.txt --budget 100000"},
        {"sample", tool + " sample --n 500 --p 0.2 --seed 99 --index 1"},
        {"popular-steps", tool + " popular-steps --set-file " + dir + "base.txt --epsilon 0.05"},
        {"family", tool + " family --set-file " + dir + "base.txt --epsilon 0.05"},
        {"find-gadget", tool + " find-gadget --a-file " + dir + "base.txt --u-file " + dir +
                            "u.txt --epsilon 0.05 --budget 100000"},
        {"moments", tool + " moments --set-file " + dir + "u.txt --epsilon 0.05 --p 0.25"},
        {"scan", tool + " scan --n 300 --c 0.5 --c 2 --c 8 --samples 25 --seed 4 --out-csv " +
                     dir + "scan_out.csv --out-plot " + dir + "scan_out.gp"},
    };
    std::string bad;
    for (const auto& [name, cmd] : cases) {
        const std::string f1 = dir + name + ".run1";
        const std::string f2 = dir + name + ".run2";
        const int rc1 = std::system((cmd + " > " + f1 + " 2>/dev/null").c_str());
        const auto csv1 = slurp(dir + "scan_out.csv"), gp1 = slurp(dir + "scan_out.gp");
        const int rc2 = std::system((cmd + " > " + f2 + " 2>/dev/null").c_str());
        const auto csv2 = slurp(dir + "scan_out.csv"), gp2 = slurp(dir + "scan_out.gp");
        if (rc1 != 0 || rc2 != 0) bad += name + "(exit) ";
        const auto out1 = slurp(f1), out2 = slurp(f2);
        // The scan case routes its output to files, so its stdout is empty.
        if (!out1 || !out2 || *out1 != *out2 || (out1->empty() && name != "scan"))
            bad += name + "(stdout) ";
        if (name == "scan" && (csv1 != csv2 || gp1 != gp2 || !csv1 || csv1->empty()))
            bad += name + "(files) ";
    }
    report(8, bad.empty(), "subcommand determinism",
           bad.empty() ? "8 subcommands byte-identical across reruns" : "differs: " + bad);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string tool = argc > 1 ? argv[1] : "";
    if (argc > 2 && std::string(argv[2]) == "--pilot-a6") {
        criterion6(true);
        return 0;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6(false);
    criterion7();
    if (tool.empty())
        report(8, false, "subcommand determinism", "no tool path given");
    else
        criterion8(tool);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
