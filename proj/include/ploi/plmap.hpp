#pragma once

#include "ploi/rational.hpp"

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace ploi {

struct Breakpoint {
    Rational x;
    Rational y;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
    friend auto operator<=>(const Breakpoint&, const Breakpoint&) = default;
};

// An element of PL_0([0,1]): an increasing piecewise-linear homeomorphism
// of the unit interval with finitely many breaks in slope.
//
// Stored canonically as the graph's vertex list: first (0,0), last (1,1),
// both coordinates strictly increasing and no three consecutive vertices
// collinear. Two maps are equal iff their vertex lists are identical.
//
// Group notation follows right actions: `compose(g, h)` sends x to (xg)h.
class PLMap {
public:
    // The identity.
    PLMap();

    // Validates and canonicalizes. Throws EndpointError / MonotonicityError.
    static PLMap from_points(std::span<const Breakpoint> points);
    static PLMap from_points(std::initializer_list<std::pair<Rational, Rational>> points);

    const std::vector<Breakpoint>& vertices() const { return pts_; }
    std::size_t piece_count() const { return pts_.size() - 1; }
    bool is_identity() const { return pts_.size() == 2; }

    // Slope of the affine piece [x_i, x_{i+1}].
    Rational slope(std::size_t piece) const;
    // Index of the piece containing a right-neighbourhood of x (x < 1).
    std::size_t piece_right_of(const Rational& x) const;
    // Index of the piece containing a left-neighbourhood of x (x > 0).
    std::size_t piece_left_of(const Rational& x) const;

    friend bool operator==(const PLMap&, const PLMap&) = default;
    friend auto operator<=>(const PLMap&, const PLMap&) = default;

private:
    explicit PLMap(std::vector<Breakpoint> canonical) : pts_(std::move(canonical)) {}
    friend PLMap canonical_from_trusted(std::vector<Breakpoint> pts);

    std::vector<Breakpoint> pts_;
};

PLMap make_plmap(std::span<const Breakpoint> points);
PLMap make_plmap(std::initializer_list<std::pair<Rational, Rational>> points);

PLMap identity();

// xg. Throws DomainError outside [0,1].
Rational evaluate(const PLMap& g, const Rational& x);

PLMap compose(const PLMap& g, const PLMap& h);
PLMap inverse(const PLMap& g);
PLMap power(const PLMap& g, long n);

// g^h = h^-1 g h
PLMap conjugate(const PLMap& g, const PLMap& h);
// [g,h] = g^-1 h^-1 g h
PLMap commutator(const PLMap& g, const PLMap& h);
// [[h,k],k]
PLMap double_commutator(const PLMap& h, const PLMap& k);

bool equals(const PLMap& g, const PLMap& h);

// Interior slope breaks, i.e. brkp(g) as a sorted list of points of (0,1).
std::vector<Rational> breakpoints_of(const PLMap& g);

}  // namespace ploi
