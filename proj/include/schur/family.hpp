#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "schur/core.hpp"
#include "schur/gadget.hpp"
#include "schur/rational.hpp"

namespace schur {

// D_eps(A): steps d participating in at least eps*n 4APs of A. The threshold
// comparison is exact (ties with count == eps*n are included).
struct PopularSteps {
    int n = 0;
    Rational epsilon;
    std::vector<int> steps;                    // ascending
    std::map<int, long long> per_step_counts;  // all steps with nonzero count
};

PopularSteps popular_steps(const IntegerSet& a, const Rational& epsilon);

// Parameters (x, y, d) of one family witness: x and y' = y - d are the second
// terms of two distinct 4APs of A with common step d and y' > x.
struct GadgetParams {
    int x = 0;
    int y = 0;
    int d = 0;
    auto operator<=>(const GadgetParams&) const = default;
};

// The Schur triples S(x,y,d) = (d, y-x-d, y-x) over all witnesses, stored
// canonically and deduplicated. Triples, counts and witness lists are
// parallel vectors sorted by triple; witness lists are kept only when
// requested (they can be large) and then list each witness in search order
// (ascending d, then x, then y).
struct TripleFamily {
    int n = 0;
    Rational epsilon;
    std::vector<SchurTriple> triples;
    std::vector<std::uint64_t> witness_counts;
    std::vector<std::vector<GadgetParams>> witnesses;
    bool has_witness_lists = false;
    std::uint64_t total_witnesses = 0;
};

TripleFamily build_triple_family(const IntegerSet& a, const Rational& epsilon,
                                 bool with_witnesses = true);

struct FamilyBoundReport {
    bool holds_hypothesis = false;  // |D_eps(A)| >= eps * n
    std::uint64_t family_size = 0;
    long double bound = 0;  // eps^2 n^2 / 4
    bool meets_bound = false;
    long long popular_step_count = 0;
};

FamilyBoundReport family_size_bound_check(const IntegerSet& a, const Rational& epsilon);

enum class GadgetSearchStatus { Found, NotFound, BudgetExceeded };

struct GadgetSearchResult {
    GadgetSearchStatus status = GadgetSearchStatus::NotFound;
    std::optional<GadgetSpec> gadget;
    std::uint64_t probes = 0;  // candidate witness validations consumed
};

// Reusable index for gadget search against many perturbed sets: popular steps
// of A plus, per step, the second terms of A's 4APs. Search order is
// ascending d, then x, then y; the first hit wins.
class GadgetSearcher {
public:
    GadgetSearcher(const IntegerSet& a, const Rational& epsilon);

    // u must be A ∪ R on the same ground set with A ⊆ u. The budget caps
    // candidate probes; exceeding it before the witness space is exhausted
    // yields BudgetExceeded rather than a (possibly wrong) NotFound.
    GadgetSearchResult find(const IntegerSet& u, std::uint64_t work_budget) const;

    const PopularSteps& steps() const { return steps_; }

private:
    int n_ = 0;
    IntegerSet base_;
    PopularSteps steps_;
    std::vector<std::vector<int>> x_terms_;   // per popular step, ascending
    std::vector<IntegerSet> x_membership_;    // same data as bitmap
};

GadgetSearchResult find_gadget_in_perturbed(const IntegerSet& a, const IntegerSet& u,
                                            const Rational& epsilon,
                                            std::uint64_t work_budget);

}  // namespace schur
