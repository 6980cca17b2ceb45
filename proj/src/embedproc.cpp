#include "ploi/embedproc.hpp"

#include "ploi/analyzer.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ploi {

namespace {

enum class EndState { None, Consistent, Inconsistent };

EndState end_state(const PLMap& g, const Interval& z) {
    const auto e = realizes_end(g, z);
    if (e.left != e.right)
        throw ImbalanceError("an element realizes exactly one end of " + to_string(z));
    if (!e.left) return EndState::None;
    return realization_consistency(g, z) == Consistency::Consistent ? EndState::Consistent : EndState::Inconsistent;
}

bool closed_inside(const ClosedInterval& c, const Interval& o) { return o.left() < c.lo && c.hi < o.right(); }

std::optional<Interval> spanning_orbital(const PLMap& g, const ClosedInterval& c) {
    for (const auto& o : orbitals_of_element(g))
        if (closed_inside(c, o)) return o;
    return std::nullopt;
}

std::optional<ClosedInterval> hull_of(const FixedSet& f) {
    if (f.empty()) return std::nullopt;
    return ClosedInterval{f.components.front().lo, f.components.back().hi};
}

// Every orbital of g lying in `region` has its closure inside `target`.
bool closures_inside(const PLMap& g, const Interval& region, const Interval& target) {
    for (const auto& o : orbitals_of_element(g))
        if (region.contains(o) && !target.contains_closure_of(o)) return false;
    return true;
}

// Clearing power of g over groups of closed sets, grouped by the orbital
// of g containing each set.
long grouped_clearing(const PLMap& g, const std::vector<ClosedInterval>& sets, Clearing mode, const char* what) {
    std::map<Interval, ClosedInterval> groups;
    for (const auto& c : sets) {
        auto o = spanning_orbital(g, c);
        if (!o) throw PreconditionError(std::string(what) + " is not covered by a single orbital");
        auto [it, fresh] = groups.try_emplace(*o, c);
        if (!fresh) {
            it->second.lo = std::min(it->second.lo, c.lo);
            it->second.hi = std::max(it->second.hi, c.hi);
        }
    }
    long n = 1;
    for (const auto& [o, h] : groups) n = std::max(n, clearing_power(g, h.lo, h.hi, mode));
    return n;
}

std::vector<ClosedInterval> interior_components(const PLMap& g, const Interval& z) {
    std::vector<ClosedInterval> out;
    for (const auto& c : interior_fixed_set(g, z).components)
        if (z.left() < c.lo && c.hi < z.right()) out.push_back(c);
    return out;
}

bool covered_by_support(const PLMap& g, const std::vector<ClosedInterval>& sets) {
    return std::all_of(sets.begin(), sets.end(), [&](const ClosedInterval& c) { return spanning_orbital(g, c).has_value(); });
}

// 1, 2, ..., 8, 16, 32, ... up to cap
std::vector<long> escalation(long cap) {
    std::vector<long> out;
    for (long p = 1; p <= std::min<long>(cap, 8); ++p) out.push_back(p);
    for (long p = 16; p <= cap; p *= 2) out.push_back(p);
    return out;
}

// 0, 1, -1, 2, -2, 4, -4, ...
std::vector<long> signed_escalation(long cap) {
    std::vector<long> out{0};
    for (long p = 1; p <= cap; p *= 2) {
        out.push_back(p);
        out.push_back(-p);
    }
    return out;
}

Census census_or_empty(const PLMap& a, const PLMap& b) {
    try {
        return classify_orbital_types(a, b);
    } catch (const Error&) {
        return {};
    }
}

Interval leading_orbital(const PLMap& g, const Interval& z) {
    const auto f = interior_fixed_set(g, z);
    if (f.empty()) throw PreconditionError("no fixed points inside " + to_string(z));
    return Interval(z.left(), f.components.front().lo);
}

std::array<PLMap, 2> pair_of(const PLMap& a, const PLMap& b) { return {a, b}; }

}  // namespace

std::string_view to_string(OrbitalType t) {
    switch (t) {
        case OrbitalType::AB: return "AB";
        case OrbitalType::Ab: return "Ab";
        case OrbitalType::aB: return "aB";
        case OrbitalType::aabb: return "aabb";
        case OrbitalType::aab: return "aab";
        case OrbitalType::abb: return "abb";
    }
    return "?";
}

OrbitalType orbital_type_from(std::string_view text) {
    for (auto t : {OrbitalType::AB, OrbitalType::Ab, OrbitalType::aB, OrbitalType::aabb, OrbitalType::aab,
                   OrbitalType::abb})
        if (to_string(t) == text) return t;
    throw ParseError("unknown orbital type '" + std::string(text) + "'");
}

bool is_inconsistent(OrbitalType t) {
    return t == OrbitalType::aabb || t == OrbitalType::aab || t == OrbitalType::abb;
}

Census classify_orbital_types(const PLMap& a, const PLMap& b) {
    Census out;
    const auto gens = pair_of(a, b);
    for (const auto& z : group_support(gens)) {
        const auto sa = end_state(a, z);
        const auto sb = end_state(b, z);
        using S = EndState;
        OrbitalType t;
        if (sa == S::Consistent && sb == S::Consistent) t = OrbitalType::AB;
        else if (sa == S::Consistent && sb == S::None) t = OrbitalType::Ab;
        else if (sa == S::None && sb == S::Consistent) t = OrbitalType::aB;
        else if (sa == S::Inconsistent && sb == S::Inconsistent) t = OrbitalType::aabb;
        else if (sa == S::Inconsistent && sb == S::None) t = OrbitalType::aab;
        else if (sa == S::None && sb == S::Inconsistent) t = OrbitalType::abb;
        else throw ImbalanceError("realization pattern on " + to_string(z) + " fits none of the six classes");
        out.push_back({z, t});
    }
    return out;
}

MechanismResult mechanism_step(const PLMap& a, const PLMap& b, long min_j, long min_k, long max_power) {
    const Census census = classify_orbital_types(a, b);
    if (std::none_of(census.begin(), census.end(), [](const TypedOrbital& t) { return is_inconsistent(t.type); }))
        throw NoInconsistentOrbital("the pair has no inconsistent orbital");

    std::vector<ClosedInterval> fa_main, fa_interior, fb;
    long n2 = 1;
    for (const auto& [z, t] : census) {
        if (t == OrbitalType::aabb || t == OrbitalType::aab) {
            for (const auto& c : interior_fixed_set(a, z).components) fa_main.push_back(c);
        } else if (t == OrbitalType::abb) {
            for (const auto& c : interior_components(a, z)) fa_interior.push_back(c);
            for (const auto& c : interior_fixed_set(b, z).components) fb.push_back(c);
        } else if (t == OrbitalType::aB) {
            if (auto s = support_hull_in(a, z)) n2 = std::max(n2, clearing_power(b, s->lo, s->hi, Clearing::Weak));
        }
    }
    std::vector<ClosedInterval> fa_all = fa_main;
    fa_all.insert(fa_all.end(), fa_interior.begin(), fa_interior.end());
    const long n1 = fa_all.empty() ? 1 : grouped_clearing(b, fa_all, Clearing::Strict, "a fixed component of a");
    const long m = fb.empty() ? 1 : grouped_clearing(a, fb, Clearing::Strict, "a fixed component of b");

    long j = std::max(m, min_j);
    long k = std::max({n1, n2, min_k});
    while (j <= max_power && k <= max_power) {
        PLMap next = commutator(power(a, j), power(b, k));
        if (covered_by_support(next, fa_main) && covered_by_support(next, fa_interior)) return {std::move(next), j, k};
        j *= 2;
        k *= 2;
    }
    throw BudgetExceeded("mechanism powers exceed " + std::to_string(max_power));
}

bool census_normalized(const Census& c) {
    bool any_aab = false;
    for (const auto& t : c) {
        if (t.type == OrbitalType::aab) any_aab = true;
        else if (t.type != OrbitalType::Ab) return false;
    }
    return any_aab;
}

namespace {

// Orbitals of type aab stay aab and orbitals of type aabb become aab.
bool transition_verified(const Census& before, const Census& after) {
    for (const auto& t : before) {
        if (t.type != OrbitalType::aab && t.type != OrbitalType::aabb) continue;
        const bool kept = std::any_of(after.begin(), after.end(), [&](const TypedOrbital& u) {
            return u.orbital == t.orbital && u.type == OrbitalType::aab;
        });
        if (!kept) return false;
    }
    return true;
}

}  // namespace

NormalizeResult normalize_orbital_types(const PLMap& a, const PLMap& b, const EmbedConfig& cfg) {
    NormalizeResult out{a, b, {}, false};
    Census census = classify_orbital_types(a, b);
    if (census_normalized(census)) return out;

    const bool has_a_side = std::any_of(census.begin(), census.end(), [](const TypedOrbital& t) {
        return t.type == OrbitalType::aab || t.type == OrbitalType::aabb;
    });
    const bool has_b_side = std::any_of(census.begin(), census.end(),
                                        [](const TypedOrbital& t) { return t.type == OrbitalType::abb; });
    if (!has_a_side && has_b_side) {
        std::swap(out.a, out.b);
        out.swapped = true;
        Census swapped = classify_orbital_types(out.a, out.b);
        out.trace.stages.push_back({"swap", {}, census, swapped});
        census = std::move(swapped);
    }

    static constexpr std::array<int, 6> signs{1, 1, 1, -1, 1, 1};
    for (int stage = 0; !census_normalized(census); ++stage) {
        if (stage >= cfg.stage_cap)
            throw TracedBudgetExceeded("orbital census did not stabilize within " + std::to_string(cfg.stage_cap) +
                                           " stages",
                                       out.trace);
        const int sign = stage < static_cast<int>(signs.size()) ? signs[stage] : 1;
        const PLMap base = sign > 0 ? out.a : inverse(out.a);
        long min_j = 1, min_k = 1;
        std::optional<MechanismResult> step;
        Census after;
        for (int retry = 0; retry <= cfg.retry_cap; ++retry) {
            MechanismResult r = mechanism_step(base, out.b, min_j, min_k, cfg.max_power);
            after = census_or_empty(out.a, r.b);
            if (!after.empty() && transition_verified(census, after)) {
                step = std::move(r);
                break;
            }
            min_j = 2 * r.j;
            min_k = 2 * r.k;
            if (min_j > cfg.max_power || min_k > cfg.max_power) break;
        }
        if (!step) throw TracedBudgetExceeded("mechanism stage " + std::to_string(stage + 1) + " failed verification", out.trace);
        out.trace.stages.push_back({sign > 0 ? "mechanism" : "mechanism-inverse",
                                    {{"j", sign * step->j}, {"k", step->k}},
                                    census,
                                    after});
        out.b = std::move(step->b);
        census = std::move(after);
    }
    return out;
}

PLMap spanning_conjugate(const PLMap& a, const PLMap& b, const Interval& a_orbital, std::size_t search_budget) {
    const auto hull = hull_of(interior_fixed_set(a, a_orbital));
    if (!hull) throw PreconditionError("a has no fixed points inside " + to_string(a_orbital));
    if (spanning_orbital(b, *hull)) return b;
    const Rational& x = hull->lo;
    const Rational& y = hull->hi;
    if (!(x < y)) throw PreconditionError("the fixed point of a is not moved by b");

    const auto gens = pair_of(a, b);
    const PLMap theta = spanning_element(gens, a_orbital, x, y, search_budget).element;

    Rational delta = (x - a_orbital.left()) / Rational(2);
    Rational x1 = x - delta;
    for (int i = 0; !(evaluate(theta, x1) > y); ++i) {
        if (i > 256) throw PreconditionError("no point left of the fixed set is carried past it");
        delta = delta / Rational(2);
        x1 = x - delta;
    }
    const Rational z = evaluate(inverse(theta), x1);

    const auto c = orbital_containing(b, x);
    if (!c) throw PreconditionError("the fixed set of a is not inside supp(b)");
    long k = 0;
    if (!(c->left() < z)) {
        const long sigma = direction_on(a, leading_orbital(a, a_orbital)) == Direction::Left ? 1 : -1;
        k = sigma * clearing_power(power(a, sigma), z, c->left(), Clearing::Strict);
    }
    PLMap gamma = conjugate(conjugate(b, power(a, k)), theta);
    if (!spanning_orbital(gamma, *hull)) throw PreconditionError("spanning conjugate failed verification");
    return gamma;
}

namespace {

struct Spanned {
    PLMap element;
    std::vector<Interval> orbitals;  // E_i, one per input orbital
};

// Builds one element with an orbital over the fixed set of a1 in each of
// the given orbitals. `push` conjugates toward those fixed sets.
Spanned span_across(const PLMap& a1, const PLMap& b, const std::vector<Interval>& regions, const PLMap& push,
                    const EmbedConfig& cfg, PipelineTrace& trace, const std::string& label) {
    const std::size_t n = regions.size();
    std::vector<ClosedInterval> hulls;
    std::vector<PLMap> gam;
    for (const auto& r : regions) {
        hulls.push_back(*hull_of(interior_fixed_set(a1, r)));
        gam.push_back(spanning_conjugate(a1, b, r, cfg.spanning_len));
    }
    auto dom = [&](std::size_t i) { return *spanning_orbital(gam[i], hulls[i]); };

    // squeeze later elements into the spanning orbitals of earlier ones
    for (std::size_t i = 1; i < n; ++i) {
        auto ok = [&](const PLMap& g) {
            for (std::size_t j = 0; j < i; ++j)
                if (!closures_inside(g, regions[j], dom(j))) return false;
            return true;
        };
        bool done = ok(gam[i]);
        for (long p : escalation(cfg.max_power)) {
            if (done) break;
            PLMap cand = conjugate(gam[i], power(push, p));
            if (ok(cand)) {
                gam[i] = std::move(cand);
                trace.stages.push_back({label + "-squeeze", {{"index", static_cast<long>(i)}, {"p", p}}, {}, {}});
                done = true;
            }
        }
        if (!done) throw TracedBudgetExceeded("could not squeeze spanning conjugate " + std::to_string(i), trace);
    }

    PLMap rho = gam[0];
    std::vector<Interval> e{dom(0)};
    for (std::size_t k = 1; k < n; ++k) {
        auto good = [&](const PLMap& c) -> std::optional<Interval> {
            for (std::size_t j = 0; j < k; ++j)
                if (!has_orbital(c, e[j])) return std::nullopt;
            auto ek = spanning_orbital(c, hulls[k]);
            if (!ek || !regions[k].contains(*ek)) return std::nullopt;
            for (std::size_t m = k + 1; m < n; ++m)
                if (!closures_inside(gam[m], regions[k], *ek)) return std::nullopt;
            return ek;
        };
        std::optional<Interval> ek;
        for (int attempt = 0; !ek; ++attempt) {
            const Interval dk = dom(k);
            const auto orbs = orbitals_of_element(rho);
            const bool end_covered = std::any_of(orbs.begin(), orbs.end(), [&](const Interval& o) {
                return o.contains(dk.left()) || o.contains(dk.right());
            });
            const bool shares_end = std::any_of(orbs.begin(), orbs.end(), [&](const Interval& o) {
                return dk.contains(o) && (o.left() == dk.left() || o.right() == dk.right());
            });
            if (end_covered) {
                for (long j : signed_escalation(cfg.max_power)) {
                    PLMap c = conjugate(rho, power(gam[k], j));
                    if ((ek = good(c))) {
                        rho = std::move(c);
                        trace.stages.push_back({label + "-conjugate", {{"index", static_cast<long>(k)}, {"j", j}}, {}, {}});
                        break;
                    }
                }
            } else if (!shares_end) {
                PLMap c = compose(rho, gam[k]);
                if ((ek = good(c))) {
                    rho = std::move(c);
                    trace.stages.push_back({label + "-product", {{"index", static_cast<long>(k)}}, {}, {}});
                }
            }
            if (ek) break;
            if (attempt >= cfg.retry_cap)
                throw TracedBudgetExceeded("spanning induction stalled at index " + std::to_string(k), trace);
            const long p = long{1} << std::min(attempt + 1, 40);
            const PLMap pp = power(push, p);
            for (std::size_t m = k; m < n; ++m) gam[m] = conjugate(gam[m], pp);
            trace.stages.push_back({label + "-resqueeze", {{"index", static_cast<long>(k)}, {"p", p}}, {}, {}});
        }
        e.push_back(*ek);
    }
    return {std::move(rho), std::move(e)};
}

bool avoids_fixed_set(const PLMap& g, const Interval& region, const PLMap& a1) {
    const auto fixed = interior_fixed_set(a1, region).components;
    for (const auto& o : orbitals_of_element(g)) {
        if (!region.contains(o)) continue;
        for (const auto& c : fixed)
            if (!(o.right() <= c.lo || c.hi <= o.left())) return false;
    }
    return true;
}

}  // namespace

std::vector<std::string> check_chain_split(const PLMap& a1, const PLMap& b1, const Interval& a_orbital) {
    std::vector<std::string> failures;
    const auto gens = pair_of(a1, b1);
    const auto comps = group_support(gens);
    if (std::find(comps.begin(), comps.end(), a_orbital) == comps.end())
        failures.push_back(to_string(a_orbital) + " is not an orbital of the new group");
    for (const auto& z : comps) {
        const auto e = realizes_end(b1, z);
        if (e.left || e.right) failures.push_back("b realizes an end of " + to_string(z));
    }
    for (const auto& z : comps) {
        if (realization_consistency(a1, z) != Consistency::Inconsistent) continue;
        const auto orbs = orbitals_of_element(a1);
        auto p = std::find_if(orbs.begin(), orbs.end(), [&](const Interval& o) { return o.left() == z.left(); });
        auto r = std::find_if(orbs.begin(), orbs.end(), [&](const Interval& o) { return o.right() == z.right(); });
        if (p == orbs.end() || r == orbs.end() || p == r) {
            failures.push_back("a does not supply end orbitals of " + to_string(z));
            continue;
        }
        const auto bo = orbitals_of_element(b1);
        const bool chain = std::any_of(bo.begin(), bo.end(), [&](const Interval& q) {
            return p->contains(q.left()) && r->contains(q.right());
        });
        if (!chain) failures.push_back(to_string(z) + " is not a transition chain of length three");
        if (direction_on(a1, *p) != Direction::Left)
            failures.push_back("a moves right on its leading orbital in " + to_string(z));
    }
    return failures;
}

ChainSplitResult chain_split(const PLMap& a, const PLMap& b, const EmbedConfig& cfg) {
    const auto gens = pair_of(a, b);
    const auto comps = group_support(gens);
    for (const auto& z : comps) {
        const auto e = realizes_end(b, z);
        if (e.left || e.right) throw PreconditionError("b realizes an end of " + to_string(z));
    }
    std::vector<Interval> inconsistent;
    for (const auto& z : comps)
        if (realization_consistency(a, z) == Consistency::Inconsistent) inconsistent.push_back(z);
    if (inconsistent.empty()) throw NoInconsistentOrbital("the pair has no inconsistent orbital");

    ChainSplitResult out{a, b, {}, 0, 0};
    const Census before = census_or_empty(a, b);
    const bool flip = direction_on(a, leading_orbital(a, inconsistent.front())) != Direction::Left;
    if (flip) out.a1 = inverse(a);
    out.trace.stages.push_back({"orient", {{"a", flip ? -1 : 1}}, before, before});
    const PLMap& a1 = out.a1;

    std::vector<Interval> lefts, rights;
    for (const auto& z : inconsistent)
        (direction_on(a1, leading_orbital(a1, z)) == Direction::Left ? lefts : rights).push_back(z);

    Spanned rho = span_across(a1, b, lefts, inverse(a1), cfg, out.trace, "rho");
    out.rho_length = lefts.size();
    out.psi_length = rights.size();
    PLMap b1 = rho.element;

    if (!rights.empty()) {
        Spanned psi = span_across(a1, b, rights, a1, cfg, out.trace, "psi");
        std::optional<PLMap> rp;
        std::vector<Interval> g;
        for (long p : escalation(cfg.max_power)) {
            PLMap cand = conjugate(rho.element, power(a1, p));
            std::vector<Interval> gi;
            bool ok = true;
            for (std::size_t i = 0; ok && i < lefts.size(); ++i) {
                auto o = spanning_orbital(cand, *hull_of(interior_fixed_set(a1, lefts[i])));
                ok = o && closures_inside(psi.element, lefts[i], *o);
                if (ok) gi.push_back(*o);
            }
            for (std::size_t i = 0; ok && i < rights.size(); ++i) ok = closures_inside(cand, rights[i], psi.orbitals[i]);
            if (ok) {
                rp = std::move(cand);
                g = std::move(gi);
                out.trace.stages.push_back({"alpha-power", {{"p", p}}, {}, {}});
                break;
            }
        }
        if (!rp) throw TracedBudgetExceeded("no alpha power separates the two spanning elements", out.trace);
        std::optional<PLMap> found;
        for (long q : signed_escalation(cfg.max_power)) {
            if (q == 0) continue;
            PLMap cand = conjugate(*rp, power(psi.element, q));
            bool ok = true;
            for (const auto& c : rights) ok = ok && avoids_fixed_set(cand, c, a1);
            for (const auto& gi : g) ok = ok && has_orbital(cand, gi);
            if (ok) {
                found = std::move(cand);
                out.trace.stages.push_back({"psi-power", {{"q", q}}, {}, {}});
                break;
            }
        }
        if (!found) throw TracedBudgetExceeded("no psi power clears the fixed sets", out.trace);
        b1 = std::move(*found);
    }

    const auto failures = check_chain_split(a1, b1, inconsistent.front());
    if (!failures.empty()) throw TracedBudgetExceeded("chain splitting failed: " + failures.front(), out.trace);
    out.b1 = std::move(b1);
    out.trace.stages.push_back({"chain-split", {}, before, census_or_empty(out.a1, out.b1)});
    return out;
}

bool b_window_holds(const PLMap& a, const PLMap& gamma0, long lo, long hi) {
    if (gamma0.is_identity()) return false;
    for (long i = lo; i <= hi; ++i) {
        if (!hull_cleared_by(conjugate(gamma0, power(a, i)), conjugate(gamma0, power(a, i + 1)))) return false;
    }
    return true;
}

ExtractResult extract_b(const PLMap& a, const PLMap& b, const EmbedConfig& cfg) {
    const auto gens = pair_of(a, b);
    const auto witness = find_transition_chain2(gens, cfg.chain_radius, cfg.max_elements);
    if (!witness) throw PreconditionError("no transition chain of length two within the search radius");

    PipelineTrace trace;
    auto fail = [&](const std::string& why) -> ExtractResult { throw TracedBudgetExceeded(why, trace); };
    auto absorb = [&](const PipelineTrace& t) {
        trace.stages.insert(trace.stages.end(), t.stages.begin(), t.stages.end());
    };

    NormalizeResult norm;
    try {
        norm = normalize_orbital_types(witness->first.signature(), witness->second.signature(), cfg);
    } catch (const TracedBudgetExceeded& e) {
        absorb(e.trace());
        throw TracedBudgetExceeded(e.what(), trace);
    }
    absorb(norm.trace);

    ChainSplitResult split;
    try {
        split = chain_split(norm.a, norm.b, cfg);
    } catch (const TracedBudgetExceeded& e) {
        absorb(e.trace());
        throw TracedBudgetExceeded(e.what(), trace);
    }
    absorb(split.trace);
    const PLMap& a1 = split.a1;
    PLMap b1 = split.b1;

    const Census census = classify_orbital_types(a1, b1);
    std::vector<Interval> incs, cons;
    for (const auto& [z, t] : census) {
        if (t == OrbitalType::aab) incs.push_back(z);
        else if (t == OrbitalType::Ab) cons.push_back(z);
        else return fail("unexpected orbital type " + std::string(to_string(t)) + " after chain splitting");
    }
    std::vector<ClosedInterval> fixed_hulls;
    for (const auto& z : incs) fixed_hulls.push_back(*hull_of(interior_fixed_set(a1, z)));

    // strip the support of b from the consistent orbitals
    std::optional<PLMap> cleaned;
    for (long n : escalation(cfg.max_power)) {
        const PLMap c = conjugate(b1, power(a1, n));
        bool ok = true;
        for (std::size_t i = 0; ok && i < incs.size(); ++i) {
            auto o = spanning_orbital(c, fixed_hulls[i]);
            ok = o && closures_inside(b1, incs[i], *o);
        }
        for (std::size_t i = 0; ok && i < cons.size(); ++i) {
            auto hb = support_hull_in(b1, cons[i]);
            if (!hb) continue;
            auto hc = support_hull_in(c, cons[i]);
            ok = hc->hi <= hb->lo || hb->hi <= hc->lo;
        }
        if (!ok) continue;
        long m = 1;
        for (std::size_t i = 0; i < incs.size(); ++i) {
            auto hb = support_hull_in(b1, incs[i]);
            if (hb) m = std::max(m, clearing_power(c, hb->lo, hb->hi, Clearing::Weak));
        }
        const PLMap bm = power(b1, m);
        PLMap next = commutator(bm, conjugate(bm, power(a1, n)));
        bool verified = true;
        for (std::size_t i = 0; verified && i < incs.size(); ++i) verified = spanning_orbital(next, fixed_hulls[i]).has_value();
        for (std::size_t i = 0; verified && i < cons.size(); ++i) verified = !support_hull_in(next, cons[i]);
        if (!verified) continue;
        trace.stages.push_back({"consistent-cleanup", {{"n", n}, {"m", m}}, census, census_or_empty(a1, next)});
        cleaned = std::move(next);
        break;
    }
    if (!cleaned) return fail("no cleanup powers verified");
    const PLMap g = std::move(*cleaned);

    // power a so that one conjugate swallows b over each fixed set
    for (long k : escalation(cfg.max_power)) {
        const PLMap ak = power(a1, k);
        const PLMap t1 = conjugate(g, ak);
        bool ok = true;
        for (std::size_t i = 0; ok && i < incs.size(); ++i) {
            auto o = spanning_orbital(t1, fixed_hulls[i]);
            ok = o && closures_inside(g, incs[i], *o);
        }
        if (!ok) continue;
        long j = 1;
        for (const auto& y : orbitals_of_element(t1))
            if (auto h = support_hull_in(g, y)) j = std::max(j, clearing_power(t1, h->lo, h->hi, Clearing::Weak));
        if (!support_cleared_by(g, power(t1, j))) continue;
        PLMap gamma0 = power(g, j);
        BCertificate cert = bcert_check(gamma0, ak);
        trace.stages.push_back({"b-powers", {{"k", k}, {"j", j}}, census, census_or_empty(ak, gamma0)});
        if (!cert.cleared) return fail("B certificate hull check failed");
        if (!b_window_holds(ak, gamma0)) return fail("B certificate window check failed");
        return {ak, std::move(gamma0), std::move(cert), std::move(trace)};
    }
    return fail("no power of a absorbs the support of b");
}

namespace {

GeneratorFamily single_block_family(std::vector<PLMap> levels) {
    GeneratorFamily f;
    f.label = FamilyLabel::Wn;
    FamilyBlock block;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        f.members.push_back({levels[i], {static_cast<long>(i + 1)}});
        block.members.push_back(i);
    }
    block.cert = WreathCert::check(std::move(levels));
    f.blocks.push_back(std::move(block));
    f.blocks_disjoint = true;
    return f;
}

// Least power of upper that clears lower inside each of its orbitals.
long clearing_exponent(const PLMap& lower, const PLMap& upper) {
    long j = 1;
    for (const auto& c : orbitals_of_element(upper))
        if (auto h = support_hull_in(lower, c)) {
            if (!closed_inside(*h, c)) return 0;
            j = std::max(j, clearing_power(upper, h->lo, h->hi, Clearing::Weak));
        }
    return j;
}

}  // namespace

GeneratorFamily tower_to_wn(const Tower& tower, long efficiency_cap) {
    if (tower.height() == 0) throw PreconditionError("empty tower");
    const auto raw = tower.raw();
    if (!is_exemplary(raw)) throw NotExemplary("tower is not exemplary");
    std::vector<PLMap> g;
    for (const auto& e : raw) g.push_back(e.signature);
    {
        GeneratorFamily f = single_block_family(g);
        if (f.valid()) return f;
    }
    const std::size_t n = g.size();
    for (std::size_t i = 0; i + 1 < n; ++i) check_nesting(g[i], g[i + 1]);

    auto make_efficient = [&](std::size_t i) {
        const auto [p, q] = efficiency_powers(g[i], g[i + 1], efficiency_cap);
        g[i] = power(g[i], p);
        g[i + 1] = power(g[i + 1], q);
    };
    for (std::size_t i = 0; i + 1 < n; ++i) make_efficient(i);
    for (std::size_t i = n - 1; i-- > 0;) {
        g[i] = double_commutator(g[i], g[i + 1]);
        if (!has_orbital(g[i], raw[i].orbital))
            throw PreconditionError("level " + std::to_string(i + 1) + " lost its tower orbital");
        make_efficient(i);
        if (i > 0) make_efficient(i - 1);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (support_cleared_by(g[i], g[i + 1])) continue;
        const long j = clearing_exponent(g[i], g[i + 1]);
        if (j == 0 || j > efficiency_cap)
            throw BudgetExceeded("level " + std::to_string(i + 2) + " cannot clear the level below");
        g[i + 1] = power(g[i + 1], j);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!has_orbital(g[i], raw[i].orbital))
            throw PreconditionError("level " + std::to_string(i + 1) + " lost its tower orbital");
    GeneratorFamily f = single_block_family(std::move(g));
    if (!f.valid()) throw BudgetExceeded("tower improvement did not reach a valid wreath certificate");
    return f;
}

namespace {

bool families_disjoint(const GeneratorFamily& f, const GeneratorFamily& h) {
    for (const auto& x : f.members)
        for (const auto& y : h.members)
            if (!supports_disjoint(x.map, y.map)) return false;
    return true;
}

GeneratorFamily conjugate_family(const GeneratorFamily& f, const PLMap& c) {
    GeneratorFamily out = f;
    for (auto& m : out.members) m.map = conjugate(m.map, c);
    for (auto& b : out.blocks) {
        std::vector<PLMap> levels;
        for (auto i : b.members) levels.push_back(out.members[i].map);
        b.cert = WreathCert::check(std::move(levels));
    }
    out.blocks_disjoint = blocks_pairwise_disjoint(out);
    return out;
}

// Family supports stay off the ends of the group support components.
bool interior_to(const GeneratorFamily& f, const std::vector<Interval>& comps) {
    for (const auto& m : f.members)
        for (const auto& o : orbitals_of_element(m.map))
            if (std::none_of(comps.begin(), comps.end(), [&](const Interval& z) { return z.contains_closure_of(o); }))
                return false;
    return true;
}

}  // namespace

WWitnessResult w_witness(std::span<const PLMap> gens, const WWitnessConfig& cfg) {
    WWitnessResult out;
    const auto comps = group_support(gens);
    if (comps.empty()) {
        out.report.push_back("generators have empty support; no tower exists");
        out.complete = cfg.max_height == 0;
        return out;
    }
    const Ball ball = enumerate_ball(gens, cfg.radius, cfg.max_elements);

    std::optional<PLMap> depth_one;
    for (const auto& e : ball.entries()) {
        const auto orbs = orbitals_of_element(e.element);
        if (std::any_of(orbs.begin(), orbs.end(), [&](const Interval& o) {
                return std::find(comps.begin(), comps.end(), o) != comps.end();
            })) {
            depth_one = e.element;
            out.report.push_back("depth-one element " + e.word.to_string());
            break;
        }
    }
    out.report.push_back(depth_one ? "separating by powers of the depth-one element"
                                   : "separating by conjugation with ball elements");

    auto separated = [&](const GeneratorFamily& f) {
        return f.valid() && std::all_of(out.families.begin(), out.families.end(),
                                        [&](const GeneratorFamily& h) { return families_disjoint(f, h); });
    };

    for (std::size_t k = cfg.max_height; k >= 1; --k) {
        const auto towers = exemplary_towers(ball, k, 64);
        if (towers.empty()) {
            out.report.push_back("no exemplary tower of height " + std::to_string(k) + " within radius " +
                                 std::to_string(cfg.radius));
            continue;
        }
        std::vector<GeneratorFamily> improved;
        for (const auto& t : towers) {
            try {
                improved.push_back(tower_to_wn(t, cfg.max_power));
            } catch (const Error&) {
            }
        }
        // prefer families that leave room near the ends of the group orbitals
        std::stable_partition(improved.begin(), improved.end(),
                              [&](const GeneratorFamily& f) { return interior_to(f, comps); });

        std::optional<GeneratorFamily> accepted;
        for (const auto& f : improved) {
            if (separated(f)) {
                accepted = f;
                break;
            }
            if (depth_one) {
                for (long p : signed_escalation(cfg.max_power)) {
                    if (p == 0) continue;
                    GeneratorFamily c = conjugate_family(f, power(*depth_one, p));
                    if (separated(c)) {
                        out.used_depth_one = true;
                        accepted = std::move(c);
                        break;
                    }
                }
            }
            if (accepted) break;
            std::size_t tried = 0;
            for (const auto& e : ball.entries()) {
                if (e.element.is_identity()) continue;
                if (++tried > cfg.conjugator_limit) break;
                GeneratorFamily c = conjugate_family(f, e.element);
                if (separated(c)) {
                    accepted = std::move(c);
                    break;
                }
            }
            if (accepted) break;
        }
        if (!accepted) {
            out.report.push_back("height " + std::to_string(k) + ": no family separated from earlier ones");
            continue;
        }
        out.report.push_back("height " + std::to_string(k) + ": W_" + std::to_string(k) + " family certified");
        accepted->label = FamilyLabel::Wn;
        out.families.push_back(std::move(*accepted));
    }
    out.complete = out.families.size() == cfg.max_height;
    return out;
}

}  // namespace ploi
