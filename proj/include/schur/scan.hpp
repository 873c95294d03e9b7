#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "schur/core.hpp"
#include "schur/rational.hpp"

namespace schur {

enum class BaseSource { HalfInterval, Full, File };

// Threshold scan configuration. The probability grid is given in units of
// the threshold scale: p = c * n^(-2/3), so the interesting regime sits at
// c = Θ(1) for every n. Sample index for grid point g, replicate i is
// g * samples + i, which makes every row reproducible from (config, c).
struct ScanConfig {
    int n = 0;
    BaseSource base = BaseSource::HalfInterval;
    std::string base_file;
    Rational epsilon{1, 10};
    std::vector<double> c_grid;
    int samples = 1;
    std::uint64_t master_seed = 0;
    TriplePolicy policy = TriplePolicy::Schur;
    std::uint64_t work_budget = 100000000ull;

    void validate() const;  // throws std::invalid_argument
};

// Reads a JSON config: {"n", "base", "base_file", "epsilon" (string, exact),
// "c_grid", "samples", "seed", "policy", "work_budget"}; unknown keys are
// rejected so typos cannot silently fall back to defaults.
ScanConfig parse_scan_config(std::istream& in);

struct ScanRow {
    double c = 0;
    double p = 0;
    double frac_gadget_found = 0;
    double frac_lower_valid = 0;
    double mean_capture = 0;
    double cheb_bound = 0;
    int m = 0;
    std::uint64_t budget_exceeded_samples = 0;  // recorded, not emitted in CSV
};

// For each grid point, draws m independent perturbed sets U = A ∪ [n]_p and
// reports (i) how often U contains a gadget whose two 4APs lie in A (presence
// certifies U is 2-Schur-Ramsey) and (ii) how often the two-class coloring
// "A red, rest blue" is Schur-free (validity certifies U is not). The
// Chebyshev zero bound and the mean number of family triples captured by the
// random part are attached per row.
std::vector<ScanRow> run_scan(const ScanConfig& config);

// Header c,p,frac_gadget_found,frac_lower_valid,mean_capture,cheb_bound,m;
// values at 6 significant digits, rows in grid order.
void emit_csv(const std::vector<ScanRow>& rows, std::ostream& out);
void emit_csv(const std::vector<ScanRow>& rows, const std::string& path);

// Gnuplot-compatible script plotting both fractions against c on a log-x
// axis, reading data from csv_name (a path relative to the script).
void emit_plot_script(const std::vector<ScanRow>& rows, const std::string& csv_name,
                      std::ostream& out);
void emit_plot_script(const std::vector<ScanRow>& rows, const std::string& csv_name,
                      const std::string& path);

}  // namespace schur
