#include "schur/decider.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace schur {

namespace {

struct Tri {
    int a, b, c;  // element indices, pairwise-distinct values
};

struct NeqPair {
    int lo, hi;  // from (v, v, 2v): color(lo) != color(hi)
};

struct Instance {
    std::vector<int> elems;  // ascending values
    std::vector<Tri> tris;
    std::vector<NeqPair> neqs;
    std::vector<std::vector<int>> tri_occ;
    std::vector<std::vector<int>> neq_occ;
};

Instance build_instance(const IntegerSet& s, TriplePolicy policy) {
    Instance ins;
    ins.elems = s.members();
    const int k = static_cast<int>(ins.elems.size());
    std::vector<int> index_of(static_cast<std::size_t>(s.ground_size()) + 1, -1);
    for (int i = 0; i < k; ++i) index_of[static_cast<std::size_t>(ins.elems[static_cast<std::size_t>(i)])] = i;
    ins.tri_occ.resize(static_cast<std::size_t>(k));
    ins.neq_occ.resize(static_cast<std::size_t>(k));
    for (const SchurTriple& t : enumerate_schur_triples(s, policy)) {
        if (t.a == t.b) {
            const int lo = index_of[static_cast<std::size_t>(t.a)];
            const int hi = index_of[static_cast<std::size_t>(t.c)];
            const int id = static_cast<int>(ins.neqs.size());
            ins.neqs.push_back(NeqPair{lo, hi});
            ins.neq_occ[static_cast<std::size_t>(lo)].push_back(id);
            ins.neq_occ[static_cast<std::size_t>(hi)].push_back(id);
        } else {
            const int ia = index_of[static_cast<std::size_t>(t.a)];
            const int ib = index_of[static_cast<std::size_t>(t.b)];
            const int ic = index_of[static_cast<std::size_t>(t.c)];
            const int id = static_cast<int>(ins.tris.size());
            ins.tris.push_back(Tri{ia, ib, ic});
            ins.tri_occ[static_cast<std::size_t>(ia)].push_back(id);
            ins.tri_occ[static_cast<std::size_t>(ib)].push_back(id);
            ins.tri_occ[static_cast<std::size_t>(ic)].push_back(id);
        }
    }
    return ins;
}

}  // namespace

DecideResult decide_with_budget(const IntegerSet& s, TriplePolicy policy,
                                std::uint64_t node_budget) {
    if (node_budget < 1) throw std::invalid_argument("node budget must be >= 1");
    const Instance ins = build_instance(s, policy);
    const int k = static_cast<int>(ins.elems.size());

    DecideResult res;
    SearchStats& stats = res.stats;
    std::vector<Color> col(static_cast<std::size_t>(k), Color::None);
    std::vector<int> trail;
    trail.reserve(static_cast<std::size_t>(k));

    struct Decision {
        std::size_t mark;  // trail size before this decision's assignment
        int idx;
        bool final_color;  // true once no alternative color remains
    };
    std::vector<Decision> decisions;

    auto assign = [&](int idx, Color c, bool forced) -> bool {
        Color& slot = col[static_cast<std::size_t>(idx)];
        if (slot != Color::None) return slot == c;
        slot = c;
        trail.push_back(idx);
        if (forced) ++stats.propagations;
        return true;
    };

    auto undo_to = [&](std::size_t mark) {
        while (trail.size() > mark) {
            col[static_cast<std::size_t>(trail.back())] = Color::None;
            trail.pop_back();
        }
    };

    // Processes trail entries from qhead onward, firing the forcing rules;
    // false on conflict.
    auto propagate = [&](std::size_t qhead) -> bool {
        for (; qhead < trail.size(); ++qhead) {
            const int v = trail[qhead];
            const Color cv = col[static_cast<std::size_t>(v)];
            const Color opp = other_color(cv);
            for (int id : ins.neq_occ[static_cast<std::size_t>(v)]) {
                const NeqPair& nq = ins.neqs[static_cast<std::size_t>(id)];
                const int o = nq.lo == v ? nq.hi : nq.lo;
                const Color co = col[static_cast<std::size_t>(o)];
                if (co == cv) return false;
                if (co == Color::None && !assign(o, opp, true)) return false;
            }
            for (int id : ins.tri_occ[static_cast<std::size_t>(v)]) {
                const Tri& t = ins.tris[static_cast<std::size_t>(id)];
                int p = t.a, q = t.b;
                if (p == v) p = t.c;
                else if (q == v) q = t.c;
                const Color cp = col[static_cast<std::size_t>(p)];
                const Color cq = col[static_cast<std::size_t>(q)];
                if (cp == cv && cq == cv) return false;
                if (cp == cv && cq == Color::None) {
                    if (!assign(q, opp, true)) return false;
                } else if (cq == cv && cp == Color::None) {
                    if (!assign(p, opp, true)) return false;
                }
            }
        }
        return true;
    };

    while (true) {
        int next = -1;
        for (int i = 0; i < k; ++i) {
            if (col[static_cast<std::size_t>(i)] == Color::None) {
                next = i;
                break;
            }
        }
        if (next < 0) {
            TwoColoring witness(s.ground_size());
            for (int i = 0; i < k; ++i)
                witness.set(ins.elems[static_cast<std::size_t>(i)], col[static_cast<std::size_t>(i)]);
            res.verdict = RamseyVerdict::NotRamsey;
            res.witness = std::move(witness);
            return res;
        }

        decisions.push_back(Decision{trail.size(), next, decisions.empty()});
        stats.max_depth = std::max<std::uint64_t>(stats.max_depth, decisions.size());
        ++stats.nodes_expanded;
        if (stats.nodes_expanded >= node_budget) {
            res.verdict = RamseyVerdict::BudgetExceeded;
            return res;
        }
        bool ok = assign(next, Color::Red, false) && propagate(decisions.back().mark);

        while (!ok) {
            while (!decisions.empty() && decisions.back().final_color) {
                undo_to(decisions.back().mark);
                decisions.pop_back();
            }
            if (decisions.empty()) {
                res.verdict = RamseyVerdict::Ramsey;
                return res;
            }
            Decision& d = decisions.back();
            undo_to(d.mark);
            d.final_color = true;
            ++stats.nodes_expanded;
            if (stats.nodes_expanded >= node_budget) {
                res.verdict = RamseyVerdict::BudgetExceeded;
                return res;
            }
            ok = assign(d.idx, Color::Blue, false) && propagate(d.mark);
        }
    }
}

ColoringSearchResult find_schur_free_coloring(const IntegerSet& s, TriplePolicy policy) {
    DecideResult r =
        decide_with_budget(s, policy, std::numeric_limits<std::uint64_t>::max());
    return ColoringSearchResult{std::move(r.witness), r.stats};
}

bool is_two_schur_ramsey(const IntegerSet& s, TriplePolicy policy) {
    return !find_schur_free_coloring(s, policy).coloring.has_value();
}

std::optional<int> smallest_ramsey_prefix(TriplePolicy policy, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    for (int n = 1; n <= n_max; ++n)
        if (is_two_schur_ramsey(IntegerSet::full(n), policy)) return n;
    return std::nullopt;
}

}  // namespace schur
