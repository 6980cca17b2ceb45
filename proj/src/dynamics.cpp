#include "ploi/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ploi {

Interval::Interval(Rational left, Rational right) : left_(std::move(left)), right_(std::move(right)) {
    if (left_ < 0 || right_ > 1 || !(left_ < right_))
        throw DomainError("interval (" + left_.to_string() + ", " + right_.to_string() +
                          ") is not a nonempty open subinterval of (0,1)");
}

std::string to_string(const Interval& a) {
    return "(" + a.left().to_string() + ", " + a.right().to_string() + ")";
}

std::string_view to_string(Direction d) { return d == Direction::Right ? "RIGHT" : "LEFT"; }

std::string_view to_string(Consistency c) {
    switch (c) {
        case Consistency::Consistent: return "CONSISTENT";
        case Consistency::Inconsistent: return "INCONSISTENT";
        case Consistency::NotBothEnds: return "NOT_BOTH_ENDS";
    }
    return "?";
}

SignedOrbital::SignedOrbital(Interval orbital, PLMap signature)
    : orbital_(std::move(orbital)), signature_(std::move(signature)) {
    if (!has_orbital(signature_, orbital_))
        throw NotAnOrbital(to_string(orbital_) + " is not an orbital of the signature");
}

namespace {

// All fixed points of g in [0,1] as sorted closed components.
std::vector<ClosedInterval> full_fixed_set(const PLMap& g) {
    const auto& v = g.vertices();
    std::vector<ClosedInterval> out;
    auto add = [&out](Rational lo, Rational hi) {
        if (!out.empty() && out.back().hi >= lo) {
            if (hi > out.back().hi) out.back().hi = std::move(hi);
            return;
        }
        out.push_back({std::move(lo), std::move(hi)});
    };
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const Rational d0 = v[i].y - v[i].x;
        const Rational d1 = v[i + 1].y - v[i + 1].x;
        if (d0.is_zero()) add(v[i].x, v[i].x);
        if (d0.is_zero() && d1.is_zero()) {
            add(v[i].x, v[i + 1].x);
        } else if (d0.sign() * d1.sign() < 0) {
            // y - x is affine on the piece; solve for its zero
            Rational c = v[i].x + d0 * (v[i + 1].x - v[i].x) / (d0 - d1);
            add(c, c);
        }
    }
    add(v.back().x, v.back().x);
    return out;
}

}  // namespace

std::vector<Interval> orbitals_of_element(const PLMap& g) {
    const auto fixed = full_fixed_set(g);
    std::vector<Interval> out;
    for (std::size_t i = 0; i + 1 < fixed.size(); ++i) out.emplace_back(fixed[i].hi, fixed[i + 1].lo);
    return out;
}

bool has_orbital(const PLMap& g, const Interval& a) {
    const auto orbs = orbitals_of_element(g);
    return std::find(orbs.begin(), orbs.end(), a) != orbs.end();
}

std::optional<Interval> orbital_containing(const PLMap& g, const Rational& x) {
    for (auto& o : orbitals_of_element(g))
        if (o.contains(x)) return o;
    return std::nullopt;
}

FixedSet fixed_set_in(const PLMap& g, const Interval& a) {
    FixedSet out;
    for (const auto& c : full_fixed_set(g)) {
        Rational lo = std::max(c.lo, a.left());
        Rational hi = std::min(c.hi, a.right());
        if (lo > hi) continue;
        if (lo == hi && (lo == 0 || lo == 1)) continue;
        out.components.push_back({std::move(lo), std::move(hi)});
    }
    return out;
}

FixedSet interior_fixed_set(const PLMap& g, const Interval& a) {
    FixedSet out;
    for (auto& c : fixed_set_in(g, a).components) {
        if (c.lo == c.hi && (c.lo == a.left() || c.lo == a.right())) continue;
        out.components.push_back(std::move(c));
    }
    return out;
}

Direction direction_on(const PLMap& g, const Interval& a) {
    if (!has_orbital(g, a)) throw NotAnOrbital(to_string(a) + " is not an orbital");
    const Rational m = midpoint(a.left(), a.right());
    return evaluate(g, m) > m ? Direction::Right : Direction::Left;
}

std::vector<Interval> support_union(std::vector<Interval> pieces) {
    std::sort(pieces.begin(), pieces.end());
    std::vector<Interval> out;
    for (auto& p : pieces) {
        if (!out.empty() && p.left() < out.back().right()) {
            if (p.right() > out.back().right()) out.back() = Interval(out.back().left(), p.right());
            continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Interval> group_support(std::span<const PLMap> gens) {
    std::vector<Interval> all;
    for (const auto& g : gens) {
        auto o = orbitals_of_element(g);
        all.insert(all.end(), o.begin(), o.end());
    }
    return support_union(std::move(all));
}

Interval induced_orbital(const Interval& a, const PLMap& h) {
    return Interval(evaluate(h, a.left()), evaluate(h, a.right()));
}

EndRealization realizes_end(const PLMap& g, const Interval& a) {
    EndRealization r;
    for (const auto& o : orbitals_of_element(g)) {
        if (o.left() == a.left()) r.left = true;
        if (o.right() == a.right()) r.right = true;
    }
    return r;
}

Consistency realization_consistency(const PLMap& g, const Interval& a) {
    const auto r = realizes_end(g, a);
    if (!r.left || !r.right) return Consistency::NotBothEnds;
    const Rational sl = g.slope(g.piece_right_of(a.left()));
    const Rational sr = g.slope(g.piece_left_of(a.right()));
    const bool inconsistent = (sl > 1 && sr > 1) || (sl < 1 && sr < 1);
    return inconsistent ? Consistency::Inconsistent : Consistency::Consistent;
}

HalfOpenInterval fundamental_domain_at(const PLMap& g, const Interval& a, const Rational& x) {
    const Direction d = direction_on(g, a);
    if (!a.contains(x)) throw PointOutside(x.to_string() + " is not in " + to_string(a));
    const Rational xg = evaluate(g, x);
    if (d == Direction::Right) return {x, xg, true};
    return {xg, x, false};
}

long clearing_power(const PLMap& g, const Rational& x, const Rational& y, Clearing mode, long cap) {
    if (x > y) throw WrongDirection("clearing needs x <= y, got " + x.to_string() + " > " + y.to_string());
    const auto orb = orbital_containing(g, x);
    if (!orb || !orb->contains(y))
        throw NoOrbital(x.to_string() + " and " + y.to_string() + " do not share an orbital");
    const bool right = evaluate(g, x) > x;
    // Track the moving endpoint: x forwards for right movers, y for left movers.
    const Rational start = right ? x : y;
    auto clears = [&](const Rational& p) {
        if (right) return mode == Clearing::Strict ? p > y : p >= y;
        return mode == Clearing::Strict ? p < x : p <= x;
    };
    if (clears(evaluate(g, start))) return 1;

    // squares[k] = g^(2^k); grow until g^(2^k) clears.
    std::vector<PLMap> squares{g};
    long n = 1;  // largest exponent known not to clear
    Rational cur = evaluate(g, start);
    while (true) {
        if (n > cap / 2) throw BudgetExceeded("clearing power exceeds cap " + std::to_string(cap));
        squares.push_back(compose(squares.back(), squares.back()));
        // cur = start * g^n with n = 2^(k-1); test 2^k
        Rational next = evaluate(squares.back(), start);
        if (clears(next)) break;
        cur = std::move(next);
        n *= 2;
    }
    // Binary lifting below 2^k.
    for (std::size_t k = squares.size() - 1; k-- > 0;) {
        Rational next = evaluate(squares[k], cur);
        if (!clears(next)) {
            cur = std::move(next);
            n += long{1} << k;
        }
    }
    if (n + 1 > cap) throw BudgetExceeded("clearing power exceeds cap " + std::to_string(cap));
    return n + 1;
}

long min_clearing_power(const PLMap& g, const Rational& x, const Rational& y) {
    return clearing_power(g, x, y, Clearing::Strict);
}

std::optional<ClosedInterval> support_hull(const PLMap& g) {
    const auto orbs = orbitals_of_element(g);
    if (orbs.empty()) return std::nullopt;
    return ClosedInterval{orbs.front().left(), orbs.back().right()};
}

std::optional<ClosedInterval> support_hull_in(const PLMap& g, const Interval& within) {
    std::optional<ClosedInterval> out;
    for (const auto& o : orbitals_of_element(g)) {
        if (!within.intersects(o)) continue;
        Rational lo = std::max(o.left(), within.left());
        Rational hi = std::min(o.right(), within.right());
        if (!out) out = ClosedInterval{std::move(lo), std::move(hi)};
        else out->hi = std::move(hi);
    }
    return out;
}

namespace {

// [x,y] inside orbital c of upper and moved off itself (>= at the boundary).
bool closed_cleared(const PLMap& upper, const Interval& c, const ClosedInterval& h) {
    if (!(c.left() < h.lo && h.hi < c.right())) return false;
    const Rational m = midpoint(c.left(), c.right());
    if (evaluate(upper, m) > m) return evaluate(upper, h.lo) >= h.hi;
    return evaluate(upper, h.hi) <= h.lo;
}

}  // namespace

bool hull_cleared_by(const PLMap& lower, const PLMap& upper) {
    const auto hull = support_hull(lower);
    if (!hull) throw IdentityInput("hull_cleared_by needs a non-identity lower element");
    for (const auto& c : orbitals_of_element(upper))
        if (c.left() < hull->lo && hull->hi < c.right()) return closed_cleared(upper, c, *hull);
    return false;
}

bool support_cleared_by(const PLMap& lower, const PLMap& upper) {
    const auto low = orbitals_of_element(lower);
    if (low.empty()) throw IdentityInput("support_cleared_by needs a non-identity lower element");
    const auto up = orbitals_of_element(upper);
    for (const auto& o : low) {
        const bool inside = std::any_of(up.begin(), up.end(), [&](const Interval& c) { return c.contains_closure_of(o); });
        if (!inside) return false;
    }
    for (const auto& c : up) {
        auto h = support_hull_in(lower, c);
        if (h && !closed_cleared(upper, c, *h)) return false;
    }
    return true;
}

bool supports_disjoint(const PLMap& g, const PLMap& h) {
    const auto a = orbitals_of_element(g);
    const auto b = orbitals_of_element(h);
    for (const auto& x : a)
        for (const auto& y : b)
            if (x.intersects(y)) return false;
    return true;
}

SpanningResult spanning_element(std::span<const PLMap> gens, const Interval& a, const Rational& x,
                                const Rational& y, std::size_t max_len) {
    if (!a.contains(x) || !a.contains(y))
        throw PointOutside("spanning search endpoints must lie in " + to_string(a));
    if (!(x < y)) throw WrongDirection("spanning search needs x < y");

    std::vector<PLMap> inverses;
    inverses.reserve(gens.size());
    for (const auto& g : gens) inverses.push_back(inverse(g));

    struct Node {
        Rational point;
        Word word;
    };
    std::set<Rational> seen{x};
    std::deque<Node> frontier{{x, Word{}}};
    Rational best = x;
    for (std::size_t depth = 0; depth < max_len && !frontier.empty(); ++depth) {
        std::deque<Node> next;
        for (const auto& node : frontier) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                for (long e : {1L, -1L}) {
                    Rational p = evaluate(e > 0 ? gens[gi] : inverses[gi], node.point);
                    if (!seen.insert(p).second) continue;
                    Word w = node.word;
                    w.append(gi, e);
                    if (p > y) return {w, evaluate_word(gens, w)};
                    if (p > best) best = p;
                    next.push_back({std::move(p), std::move(w)});
                }
            }
        }
        frontier = std::move(next);
    }
    throw SearchExhausted("no word of length <= " + std::to_string(max_len) + " carries " + x.to_string() +
                              " past " + y.to_string(),
                          best);
}

}  // namespace ploi
