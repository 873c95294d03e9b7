#include "schur/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace schur {

namespace {

void check_epsilon(const Rational& eps) {
    if (eps.num <= 0 || static_cast<__int128>(eps.num) > eps.den)
        throw std::invalid_argument("epsilon must lie in (0, 1]");
}

// Second terms x of 4APs (x-d, x, x+d, x+2d) fully inside a.
std::vector<int> ap_second_terms(const IntegerSet& a, int d) {
    std::vector<int> xs;
    const int n = a.ground_size();
    for (int start = 1; start + 3 * d <= n; ++start) {
        if (a.contains(start) && a.contains(start + d) && a.contains(start + 2 * d) &&
            a.contains(start + 3 * d))
            xs.push_back(start + d);
    }
    return xs;
}

std::uint64_t pack_triple(const SchurTriple& t) {
    return (static_cast<std::uint64_t>(t.a) << 42) | (static_cast<std::uint64_t>(t.b) << 21) |
           static_cast<std::uint64_t>(t.c);
}

}  // namespace

PopularSteps popular_steps(const IntegerSet& a, const Rational& epsilon) {
    check_epsilon(epsilon);
    PopularSteps ps;
    ps.n = a.ground_size();
    ps.epsilon = epsilon;
    ps.per_step_counts = count_4aps_by_step(a);
    for (const auto& [d, cnt] : ps.per_step_counts)
        if (meets_threshold(cnt, epsilon, ps.n)) ps.steps.push_back(d);
    return ps;
}

TripleFamily build_triple_family(const IntegerSet& a, const Rational& epsilon,
                                 bool with_witnesses) {
    const PopularSteps ps = popular_steps(a, epsilon);
    TripleFamily fam;
    fam.n = a.ground_size();
    fam.epsilon = epsilon;
    fam.has_witness_lists = with_witnesses;

    std::unordered_map<std::uint64_t, std::size_t> slot_of;
    slot_of.reserve(1024);
    for (int d : ps.steps) {
        const std::vector<int> xs = ap_second_terms(a, d);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                const int x = xs[i];
                const int y = xs[j] + d;  // y' = xs[j] > x
                const SchurTriple t = SchurTriple::canonical(d, y - x - d);
                const std::uint64_t key = pack_triple(t);
                auto [it, fresh] = slot_of.try_emplace(key, fam.triples.size());
                if (fresh) {
                    fam.triples.push_back(t);
                    fam.witness_counts.push_back(0);
                    if (with_witnesses) fam.witnesses.emplace_back();
                }
                ++fam.witness_counts[it->second];
                if (with_witnesses) fam.witnesses[it->second].push_back(GadgetParams{x, y, d});
                ++fam.total_witnesses;
            }
        }
    }

    // Sort by triple, keeping the parallel vectors aligned.
    std::vector<std::size_t> order(fam.triples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&fam](std::size_t l, std::size_t r) { return fam.triples[l] < fam.triples[r]; });
    TripleFamily sorted;
    sorted.n = fam.n;
    sorted.epsilon = fam.epsilon;
    sorted.has_witness_lists = fam.has_witness_lists;
    sorted.total_witnesses = fam.total_witnesses;
    sorted.triples.reserve(order.size());
    sorted.witness_counts.reserve(order.size());
    if (with_witnesses) sorted.witnesses.reserve(order.size());
    for (std::size_t idx : order) {
        sorted.triples.push_back(fam.triples[idx]);
        sorted.witness_counts.push_back(fam.witness_counts[idx]);
        if (with_witnesses) sorted.witnesses.push_back(std::move(fam.witnesses[idx]));
    }
    return sorted;
}

FamilyBoundReport family_size_bound_check(const IntegerSet& a, const Rational& epsilon) {
    const PopularSteps ps = popular_steps(a, epsilon);
    const TripleFamily fam = build_triple_family(a, epsilon, false);
    FamilyBoundReport rep;
    rep.popular_step_count = static_cast<long long>(ps.steps.size());
    rep.holds_hypothesis = meets_threshold(rep.popular_step_count, epsilon, ps.n);
    rep.family_size = fam.triples.size();
    const long double e = epsilon.value();
    rep.bound = e * e * static_cast<long double>(ps.n) * static_cast<long double>(ps.n) / 4.0L;
    // family_size >= eps^2 n^2 / 4, exactly: 4 den^2 size >= num^2 n^2.
    const __int128 lhs = static_cast<__int128>(4) * epsilon.den * epsilon.den *
                         static_cast<__int128>(rep.family_size);
    const __int128 rhs = static_cast<__int128>(epsilon.num) * epsilon.num *
                         static_cast<__int128>(ps.n) * static_cast<__int128>(ps.n);
    rep.meets_bound = lhs >= rhs;
    return rep;
}

GadgetSearcher::GadgetSearcher(const IntegerSet& a, const Rational& epsilon)
    : n_(a.ground_size()), base_(a), steps_(popular_steps(a, epsilon)) {
    x_terms_.reserve(steps_.steps.size());
    x_membership_.reserve(steps_.steps.size());
    for (int d : steps_.steps) {
        x_terms_.push_back(ap_second_terms(a, d));
        x_membership_.push_back(IntegerSet::from_members(n_, x_terms_.back()));
    }
}

GadgetSearchResult GadgetSearcher::find(const IntegerSet& u, std::uint64_t work_budget) const {
    if (u.ground_size() != n_)
        throw std::invalid_argument("perturbed set has a different ground size than the base");
    if (!base_.is_subset_of(u))
        throw std::invalid_argument("perturbed set must contain the base set");

    GadgetSearchResult res;
    const std::vector<int> u_members = u.members();
    std::vector<int> deltas;  // candidate y-x-d values, ascending

    for (std::size_t si = 0; si < steps_.steps.size(); ++si) {
        const int d = steps_.steps[si];
        // schur_part = (d, y-x-d, y-x) must land in U; d itself first.
        if (!u.contains(d)) continue;
        const std::vector<int>& xs = x_terms_[si];
        if (xs.empty()) continue;
        const int x_max = xs.back();

        deltas.clear();
        for (int m : u_members) {
            // Both usefulness conditions are monotone in m.
            if (m + d > n_ || xs.front() + m > x_max) break;
            if (u.contains(m + d)) deltas.push_back(m);
        }
        if (deltas.empty()) continue;

        const IntegerSet& xbits = x_membership_[si];
        for (int x : xs) {
            for (int delta : deltas) {
                if (x + delta > x_max) break;
                if (res.probes >= work_budget) {
                    res.status = GadgetSearchStatus::BudgetExceeded;
                    return res;
                }
                ++res.probes;
                if (!xbits.contains(x + delta)) continue;
                // Witness found: y' = x + delta, y = y' + d. Re-validate fully.
                GadgetSpec g = build_gadget(x, x + delta + d, d, n_);
                if (!gadget_contained_in(g, u))
                    throw std::logic_error("gadget search produced an uncontained witness");
                res.status = GadgetSearchStatus::Found;
                res.gadget = std::move(g);
                return res;
            }
        }
    }
    res.status = GadgetSearchStatus::NotFound;
    return res;
}

GadgetSearchResult find_gadget_in_perturbed(const IntegerSet& a, const IntegerSet& u,
                                            const Rational& epsilon,
                                            std::uint64_t work_budget) {
    return GadgetSearcher(a, epsilon).find(u, work_budget);
}

}  // namespace schur
