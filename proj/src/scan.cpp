#include "schur/scan.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "schur/errors.hpp"
#include "schur/family.hpp"
#include "schur/moments.hpp"
#include "schur/perturb.hpp"
#include "schur/set_io.hpp"

namespace schur {

void ScanConfig::validate() const {
    if (n < 2) throw std::invalid_argument("scan requires n >= 2");
    if (samples < 1) throw std::invalid_argument("scan requires samples >= 1");
    if (c_grid.empty()) throw std::invalid_argument("scan requires a nonempty c grid");
    if (epsilon.num <= 0 || epsilon.num > epsilon.den)
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    double prev = 0.0;
    const double scale = std::pow(static_cast<double>(n), -2.0 / 3.0);
    for (double c : c_grid) {
        if (!(c > prev))
            throw std::invalid_argument("c grid must be positive and strictly increasing");
        if (c * scale > 1.0)
            throw std::invalid_argument("grid point yields p = c*n^(-2/3) > 1");
        prev = c;
    }
    if (base == BaseSource::File && base_file.empty())
        throw std::invalid_argument("file base requires a path");
}

namespace {

IntegerSet resolve_base(const ScanConfig& cfg) {
    switch (cfg.base) {
        case BaseSource::HalfInterval:
            return half_interval(cfg.n);
        case BaseSource::Full:
            return IntegerSet::full(cfg.n);
        case BaseSource::File: {
            IntegerSet s = read_set_file(cfg.base_file);
            if (s.ground_size() != cfg.n)
                throw std::invalid_argument("base set file ground size differs from scan n");
            return s;
        }
    }
    throw std::logic_error("unreachable base source");
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

ScanConfig parse_scan_config(std::istream& in) {
    const nlohmann::json j = nlohmann::json::parse(in);
    static const char* known[] = {"n",       "base", "base_file", "epsilon",    "c_grid",
                                  "samples", "seed", "policy",    "work_budget"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument("unknown scan config key: " + key);
    }
    ScanConfig cfg;
    cfg.n = j.at("n").get<int>();
    const std::string base = j.value("base", std::string("half-interval"));
    if (base == "half-interval")
        cfg.base = BaseSource::HalfInterval;
    else if (base == "full")
        cfg.base = BaseSource::Full;
    else if (base == "file")
        cfg.base = BaseSource::File;
    else
        throw std::invalid_argument("base must be half-interval, full, or file");
    cfg.base_file = j.value("base_file", std::string());
    cfg.epsilon = Rational::parse(j.value("epsilon", std::string("0.1")));
    cfg.c_grid = j.at("c_grid").get<std::vector<double>>();
    cfg.samples = j.value("samples", 1);
    cfg.master_seed = j.value("seed", std::uint64_t{0});
    const std::string policy = j.value("policy", std::string("schur"));
    if (policy == "schur")
        cfg.policy = TriplePolicy::Schur;
    else if (policy == "weak-schur")
        cfg.policy = TriplePolicy::WeakSchur;
    else
        throw std::invalid_argument("policy must be schur or weak-schur");
    cfg.work_budget = j.value("work_budget", std::uint64_t{100000000});
    cfg.validate();
    return cfg;
}

std::vector<ScanRow> run_scan(const ScanConfig& cfg) {
    cfg.validate();
    const IntegerSet base = resolve_base(cfg);
    const TripleFamily family = build_triple_family(base, cfg.epsilon, false);
    const GadgetSearcher searcher(base, cfg.epsilon);
    const OverlapProfile profile =
        family.triples.empty() ? OverlapProfile{} : overlap_profile_bucketed(family);
    const double scale = std::pow(static_cast<double>(cfg.n), -2.0 / 3.0);

    std::vector<ScanRow> rows;
    rows.reserve(cfg.c_grid.size());
    for (std::size_t gi = 0; gi < cfg.c_grid.size(); ++gi) {
        ScanRow row;
        row.c = cfg.c_grid[gi];
        row.p = row.c * scale;
        row.m = cfg.samples;

        std::uint64_t found = 0, lower_valid = 0;
        long double capture_sum = 0;
        for (int i = 0; i < cfg.samples; ++i) {
            SampleSpec spec{cfg.n, row.p, cfg.master_seed,
                            gi * static_cast<std::uint64_t>(cfg.samples) +
                                static_cast<std::uint64_t>(i)};
            const IntegerSet r = sample_np(spec);
            const IntegerSet u = perturbed_union(base, r);

            const GadgetSearchResult g = searcher.find(u, cfg.work_budget);
            if (g.status == GadgetSearchStatus::Found) ++found;
            if (g.status == GadgetSearchStatus::BudgetExceeded) ++row.budget_exceeded_samples;

            const TwoColoring col = lower_bound_coloring(base, u);
            if (!verify_coloring(u, col, cfg.policy).has_value()) ++lower_valid;

            std::uint64_t captured = 0;
            for (const SchurTriple& t : family.triples)
                if (r.contains(t.a) && r.contains(t.b) && r.contains(t.c)) ++captured;
            capture_sum += static_cast<long double>(captured);
        }
        row.frac_gadget_found = static_cast<double>(found) / cfg.samples;
        row.frac_lower_valid = static_cast<double>(lower_valid) / cfg.samples;
        row.mean_capture = static_cast<double>(capture_sum / cfg.samples);
        if (family.triples.empty()) {
            row.cheb_bound = std::numeric_limits<double>::infinity();
        } else {
            row.cheb_bound =
                static_cast<double>(chebyshev_zero_bound(family, row.p, profile).cheb_bound);
        }
        rows.push_back(row);
    }
    return rows;
}

void emit_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
    out << "c,p,frac_gadget_found,frac_lower_valid,mean_capture,cheb_bound,m\n";
    for (const ScanRow& r : rows) {
        out << fmt6(r.c) << ',' << fmt6(r.p) << ',' << fmt6(r.frac_gadget_found) << ','
            << fmt6(r.frac_lower_valid) << ',' << fmt6(r.mean_capture) << ','
            << fmt6(r.cheb_bound) << ',' << r.m << '\n';
    }
}

void emit_csv(const std::vector<ScanRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    emit_csv(rows, out);
    if (!out) throw std::runtime_error("CSV write failed: " + path);
}

void emit_plot_script(const std::vector<ScanRow>& rows, const std::string& csv_name,
                      std::ostream& out) {
    (void)rows;
    out << "set datafile separator ','\n"
        << "set logscale x\n"
        << "set xlabel 'c   (p = c * n^{-2/3})'\n"
        << "set ylabel 'fraction of samples'\n"
        << "set yrange [-0.05:1.05]\n"
        << "set key center left\n"
        << "plot '" << csv_name << "' using 1:3 with linespoints title 'gadget found', \\\n"
        << "     '" << csv_name << "' using 1:4 with linespoints title 'lower coloring valid'\n";
}

void emit_plot_script(const std::vector<ScanRow>& rows, const std::string& csv_name,
                      const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write plot script: " + path);
    emit_plot_script(rows, csv_name, out);
    if (!out) throw std::runtime_error("plot script write failed: " + path);
}

}  // namespace schur
