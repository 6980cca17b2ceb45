#include "ploi/structures.hpp"

#include <algorithm>

namespace ploi {

bool is_transition_chain2(const SignedOrbital& p, const SignedOrbital& q) {
    const Interval* a = &p.orbital();
    const Interval* b = &q.orbital();
    if (b->left() < a->left()) std::swap(a, b);
    return a->left() < b->left() && b->left() < a->right() && a->right() < b->right();
}

std::optional<TransitionChainWitness> find_transition_chain2(const Ball& ball) {
    struct Item {
        SignedOrbital so;
        std::size_t entry;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < ball.size(); ++i) {
        const auto& e = ball.entries()[i];
        for (auto& o : orbitals_of_element(e.element)) items.push_back({SignedOrbital(o, e.element), i});
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (!is_transition_chain2(items[i].so, items[j].so)) continue;
            const Item* p = &items[i];
            const Item* q = &items[j];
            if (q->so.orbital().left() < p->so.orbital().left()) std::swap(p, q);
            return TransitionChainWitness{p->so, q->so, ball.entries()[p->entry].word, ball.entries()[q->entry].word};
        }
    }
    return std::nullopt;
}

std::optional<TransitionChainWitness> find_transition_chain2(std::span<const PLMap> gens, std::size_t max_len,
                                                             std::size_t max_elements) {
    return find_transition_chain2(enumerate_ball(gens, max_len, max_elements));
}

bool is_tower(std::span<const TowerEntry> entries) {
    for (const auto& e : entries)
        if (!has_orbital(e.signature, e.orbital)) return false;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        const auto& lo = entries[i];
        const auto& up = entries[i + 1];
        if (!up.orbital.contains(lo.orbital)) return false;
        // equal orbitals would force equal signatures, i.e. a repeated entry
        if (lo.orbital == up.orbital) return false;
    }
    return true;
}

bool is_exemplary(std::span<const TowerEntry> entries) {
    if (!is_tower(entries)) return false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto orbs = orbitals_of_element(entries[i].signature);
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const Interval& b = entries[j].orbital;
            for (const auto& o : orbs) {
                if (o.contains(b.left()) || o.contains(b.right())) return false;
                if (b.contains(o) && (o.left() == b.left() || o.right() == b.right())) return false;
            }
        }
    }
    return true;
}

std::vector<TowerEntry> Tower::raw() const {
    std::vector<TowerEntry> out;
    for (const auto& e : entries) out.push_back({e.orbital(), e.signature()});
    return out;
}

void check_nesting(const PLMap& h, const PLMap& k) {
    for (const auto& a : orbitals_of_element(h))
        for (const auto& b : orbitals_of_element(k)) {
            if (!a.intersects(b) || a == b || b.contains_closure_of(a) || a.contains_closure_of(b)) continue;
            throw NestingError("orbitals " + to_string(a) + " and " + to_string(b) + " are neither equal nor nested");
        }
}

namespace {

// The orbitals C of `outer` that contain the closure of an orbital of
// `inner`, each with the hull of supp(inner) inside C.
std::vector<std::pair<Interval, ClosedInterval>> containing_pairs(const PLMap& outer, const PLMap& inner) {
    std::vector<std::pair<Interval, ClosedInterval>> out;
    const auto in = orbitals_of_element(inner);
    for (const auto& c : orbitals_of_element(outer)) {
        const bool holds = std::any_of(in.begin(), in.end(), [&](const Interval& o) { return c.contains_closure_of(o); });
        if (!holds) continue;
        out.emplace_back(c, *support_hull_in(inner, c));
    }
    return out;
}

bool cleared_in(const PLMap& g, const Interval& c, const ClosedInterval& h) {
    const Rational m = midpoint(c.left(), c.right());
    if (evaluate(g, m) > m) return evaluate(g, h.lo) >= h.hi;
    return evaluate(g, h.hi) <= h.lo;
}

void collect(const PLMap& outer, const PLMap& inner, EfficiencyReport& r) {
    for (const auto& [c, h] : containing_pairs(outer, inner)) {
        if (cleared_in(outer, c, h)) continue;
        r.efficient = false;
        r.violations.push_back({c, Interval(h.lo, h.hi)});
    }
}

long least_power(const PLMap& outer, const PLMap& inner, long cap) {
    long need = 1;
    for (const auto& [c, h] : containing_pairs(outer, inner)) {
        // single fundamental domain: >= at the far end of the hull
        need = std::max(need, clearing_power(outer, h.lo, h.hi, Clearing::Weak, cap));
    }
    return need;
}

}  // namespace

EfficiencyReport mutually_efficient(const PLMap& h, const PLMap& k) {
    check_nesting(h, k);
    EfficiencyReport r;
    collect(h, k, r);
    collect(k, h, r);
    return r;
}

std::pair<long, long> efficiency_powers(const PLMap& h, const PLMap& k, long cap) {
    check_nesting(h, k);
    // The two conditions decouple: powers do not change supports, so the
    // condition inside orbitals of h only constrains the power of h.
    long a = 0, b = 0;
    try {
        a = least_power(h, k, cap);
        b = least_power(k, h, cap);
    } catch (const BudgetExceeded&) {
        throw BudgetExceeded("efficiency powers exceed cap " + std::to_string(cap));
    }
    if (!mutually_efficient(power(h, a), power(k, b)).efficient)
        throw PreconditionError("efficiency powers failed verification");
    return {a, b};
}

long commutator_orbital_bound(const SignedOrbital& base, const SignedOrbital& top) {
    const std::vector<TowerEntry> t{{base.orbital(), base.signature()}, {top.orbital(), top.signature()}};
    if (!is_exemplary(t)) throw NotExemplary("base and top do not form an exemplary tower of height two");
    const auto hull = support_hull_in(base.signature(), top.orbital());
    const long m = min_clearing_power(top.signature(), hull->lo, hull->hi);
    for (long n : {m, m + 1}) {
        if (!has_orbital(commutator(base.signature(), power(top.signature(), n)), base.orbital()))
            throw PreconditionError("commutator orbital check failed at n = " + std::to_string(n));
    }
    return m;
}

std::optional<ImbalanceWitness> imbalance_witness_search(const Ball& ball, std::span<const PLMap> gens) {
    const auto comps = group_support(gens);
    for (const auto& e : ball.entries()) {
        for (const auto& a : comps) {
            const auto r = realizes_end(e.element, a);
            if (r.left != r.right) return ImbalanceWitness{e.element, e.word, a, r.left};
        }
    }
    return std::nullopt;
}

std::optional<ImbalanceWitness> imbalance_witness_search(std::span<const PLMap> gens, std::size_t max_len,
                                                         std::size_t max_elements) {
    return imbalance_witness_search(enumerate_ball(gens, max_len, max_elements), gens);
}

}  // namespace ploi
