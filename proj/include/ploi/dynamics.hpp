#pragma once

#include "ploi/errors.hpp"
#include "ploi/plmap.hpp"
#include "ploi/word.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ploi {

// Open interval (left, right) with 0 <= left < right <= 1.
class Interval {
public:
    Interval(Rational left, Rational right);

    const Rational& left() const { return left_; }
    const Rational& right() const { return right_; }

    bool contains(const Rational& x) const { return left_ < x && x < right_; }
    // A is a subset of *this (non-strict, as open sets).
    bool contains(const Interval& a) const { return left_ <= a.left_ && a.right_ <= right_; }
    // closure(a) is a subset of *this
    bool contains_closure_of(const Interval& a) const { return left_ < a.left_ && a.right_ < right_; }
    bool intersects(const Interval& a) const { return left_ < a.right_ && a.left_ < right_; }
    Rational length() const { return right_ - left_; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;

private:
    Rational left_;
    Rational right_;
};

std::string to_string(const Interval& a);

// Closed interval [lo, hi], lo <= hi; a point when lo == hi.
struct ClosedInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
    friend auto operator<=>(const ClosedInterval&, const ClosedInterval&) = default;
};

// Sorted disjoint closed components.
struct FixedSet {
    std::vector<ClosedInterval> components;

    bool empty() const { return components.empty(); }
    friend bool operator==(const FixedSet&, const FixedSet&) = default;
};

enum class Direction { Right, Left };

std::string_view to_string(Direction d);

// A pair (A, g) with A an orbital of g; checked on construction.
class SignedOrbital {
public:
    SignedOrbital(Interval orbital, PLMap signature);

    const Interval& orbital() const { return orbital_; }
    const PLMap& signature() const { return signature_; }

    friend bool operator==(const SignedOrbital&, const SignedOrbital&) = default;

private:
    Interval orbital_;
    PLMap signature_;
};

// Half-open interval: [lo, hi) when closed_at_lo, else (lo, hi].
struct HalfOpenInterval {
    Rational lo;
    Rational hi;
    bool closed_at_lo = true;

    bool contains(const Rational& x) const {
        return closed_at_lo ? (lo <= x && x < hi) : (lo < x && x <= hi);
    }
    friend bool operator==(const HalfOpenInterval&, const HalfOpenInterval&) = default;
};

struct EndRealization {
    bool left = false;
    bool right = false;
    friend bool operator==(const EndRealization&, const EndRealization&) = default;
};

enum class Consistency { Consistent, Inconsistent, NotBothEnds };

std::string_view to_string(Consistency c);

// Maximal open intervals moved by g, left to right.
std::vector<Interval> orbitals_of_element(const PLMap& g);
bool has_orbital(const PLMap& g, const Interval& a);
std::optional<Interval> orbital_containing(const PLMap& g, const Rational& x);

// Fixed points of g in closure(A), minus the isolated points 0 and 1.
// The identity on (0,1) yields the single component [0,1].
FixedSet fixed_set_in(const PLMap& g, const Interval& a);
// Fixed points of g in the open interval A; isolated endpoint components of
// fixed_set_in are dropped and touching components are clipped to A.
FixedSet interior_fixed_set(const PLMap& g, const Interval& a);

// Throws NotAnOrbital unless A is an orbital of g.
Direction direction_on(const PLMap& g, const Interval& a);

// Components of supp<gens>, which is the union of the generators' supports.
std::vector<Interval> group_support(std::span<const PLMap> gens);
std::vector<Interval> support_union(std::vector<Interval> pieces);

Interval induced_orbital(const Interval& a, const PLMap& h);

EndRealization realizes_end(const PLMap& g, const Interval& a);
Consistency realization_consistency(const PLMap& g, const Interval& a);

// [x, xg) for a right mover; (xg, x] for a left mover.
HalfOpenInterval fundamental_domain_at(const PLMap& g, const Interval& a, const Rational& x);

enum class Clearing { Strict, Weak };

// Least n >= 1 such that g^n moves [x, y] off itself inside the orbital of g
// containing both points: x g^n > y (Weak: >=) for right movers, and
// y g^n < x (Weak: <=) for left movers. Throws NoOrbital when x and y do not
// share an orbital, WrongDirection when x > y, BudgetExceeded past cap.
long clearing_power(const PLMap& g, const Rational& x, const Rational& y, Clearing mode,
                    long cap = long{1} << 40);

// clearing_power with Clearing::Strict and the default cap.
long min_clearing_power(const PLMap& g, const Rational& x, const Rational& y);

// Smallest closed interval containing supp(g); empty for the identity.
std::optional<ClosedInterval> support_hull(const PLMap& g);
// Hull of the union of the given orbitals that lie inside `within`.
std::optional<ClosedInterval> support_hull_in(const PLMap& g, const Interval& within);

// The closed hull of supp(lower) lies in one orbital of upper and is moved
// off itself by upper (boundary equality allowed). Throws IdentityInput.
bool hull_cleared_by(const PLMap& lower, const PLMap& upper);

// Per-orbital form: every orbital of lower has closure inside an orbital of
// upper, and in each orbital C of upper the hull of supp(lower) within C is
// cleared by upper. Coincides with hull_cleared_by when supp(lower) sits in
// a single orbital of upper.
bool support_cleared_by(const PLMap& lower, const PLMap& upper);

bool supports_disjoint(const PLMap& g, const PLMap& h);

struct SpanningResult {
    Word word;
    PLMap element;
};

class SearchExhausted : public ErrorOf<ErrorKind::SearchExhausted> {
public:
    SearchExhausted(const std::string& what, Rational best)
        : ErrorOf(what), best_(std::move(best)) {}
    // Largest image of the start point reached within the budget.
    const Rational& best_point() const { return best_; }

private:
    Rational best_;
};

// Shortlex-least word theta of length <= max_len with x theta > y.
SpanningResult spanning_element(std::span<const PLMap> gens, const Interval& a, const Rational& x,
                                const Rational& y, std::size_t max_len);

}  // namespace ploi
