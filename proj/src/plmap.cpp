#include "ploi/plmap.hpp"

#include "ploi/errors.hpp"

#include <algorithm>

namespace ploi {

namespace {

// Drops interior vertices whose neighbours' slopes agree.
std::vector<Breakpoint> merge_collinear(std::vector<Breakpoint> pts) {
    std::vector<Breakpoint> out;
    out.reserve(pts.size());
    for (auto& p : pts) {
        while (out.size() >= 2) {
            const Breakpoint& a = out[out.size() - 2];
            const Breakpoint& b = out.back();
            // (b - a) and (p - a) are parallel iff the cross product vanishes
            if ((b.y - a.y) * (p.x - a.x) != (p.y - a.y) * (b.x - a.x)) break;
            out.pop_back();
        }
        out.push_back(std::move(p));
    }
    return out;
}

// Linear interpolation on the segment [a, b] evaluated at x.
Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Rational interpolate_inverse(const Breakpoint& a, const Breakpoint& b, const Rational& y) {
    return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
}

}  // namespace

PLMap canonical_from_trusted(std::vector<Breakpoint> pts) { return PLMap(merge_collinear(std::move(pts))); }

PLMap::PLMap() : pts_{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}} {}

PLMap PLMap::from_points(std::span<const Breakpoint> points) {
    if (points.size() < 2) throw EndpointError("a PL map needs at least the points (0,0) and (1,1)");
    const Breakpoint& first = points.front();
    const Breakpoint& last = points.back();
    if (first.x != 0 || first.y != 0)
        throw EndpointError("first point must be (0,0), got (" + first.x.to_string() + "," +
                            first.y.to_string() + ")");
    if (last.x != 1 || last.y != 1)
        throw EndpointError("last point must be (1,1), got (" + last.x.to_string() + "," +
                            last.y.to_string() + ")");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i - 1].x < points[i].x) || !(points[i - 1].y < points[i].y))
            throw MonotonicityError("coordinates must be strictly increasing at point " +
                                    std::to_string(i));
    }
    return PLMap(merge_collinear({points.begin(), points.end()}));
}

PLMap PLMap::from_points(std::initializer_list<std::pair<Rational, Rational>> points) {
    std::vector<Breakpoint> pts;
    pts.reserve(points.size());
    for (const auto& [x, y] : points) pts.push_back({x, y});
    return from_points(pts);
}

Rational PLMap::slope(std::size_t piece) const {
    const Breakpoint& a = pts_.at(piece);
    const Breakpoint& b = pts_.at(piece + 1);
    return (b.y - a.y) / (b.x - a.x);
}

std::size_t PLMap::piece_right_of(const Rational& x) const {
    // last vertex with vx <= x
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                               [](const Rational& v, const Breakpoint& p) { return v < p.x; });
    std::size_t i = static_cast<std::size_t>(it - pts_.begin()) - 1;
    return std::min(i, piece_count() - 1);
}

std::size_t PLMap::piece_left_of(const Rational& x) const {
    // first vertex with vx >= x, minus one
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x,
                               [](const Breakpoint& p, const Rational& v) { return p.x < v; });
    std::size_t i = static_cast<std::size_t>(it - pts_.begin());
    return i == 0 ? 0 : i - 1;
}

PLMap make_plmap(std::span<const Breakpoint> points) { return PLMap::from_points(points); }

PLMap make_plmap(std::initializer_list<std::pair<Rational, Rational>> points) {
    return PLMap::from_points(points);
}

PLMap identity() { return PLMap(); }

Rational evaluate(const PLMap& g, const Rational& x) {
    if (x < 0 || x > 1) throw DomainError("point " + x.to_string() + " outside [0,1]");
    const auto& v = g.vertices();
    const std::size_t i = g.piece_right_of(x);
    return interpolate(v[i], v[i + 1], x);
}

PLMap compose(const PLMap& g, const PLMap& h) {
    // The vertices of x -> (xg)h sit over the merged list of g's y-values
    // and h's x-values; walk both in one pass.
    const auto& gv = g.vertices();
    const auto& hv = h.vertices();
    std::vector<Breakpoint> out;
    out.reserve(gv.size() + hv.size());
    std::size_t i = 0;  // g vertex
    std::size_t j = 0;  // h vertex
    std::size_t gp = 0; // g piece whose y-range contains the current y
    std::size_t hp = 0; // h piece whose x-range contains the current y
    while (i < gv.size() && j < hv.size()) {
        const Rational& gy = gv[i].y;
        const Rational& hx = hv[j].x;
        if (gy == hx) {
            out.push_back({gv[i].x, hv[j].y});
            ++i;
            ++j;
        } else if (gy < hx) {
            while (hp + 1 < hv.size() - 1 && hv[hp + 1].x <= gy) ++hp;
            out.push_back({gv[i].x, interpolate(hv[hp], hv[hp + 1], gy)});
            ++i;
        } else {
            while (gp + 1 < gv.size() - 1 && gv[gp + 1].y <= hx) ++gp;
            out.push_back({interpolate_inverse(gv[gp], gv[gp + 1], hx), hv[j].y});
            ++j;
        }
    }
    return canonical_from_trusted(std::move(out));
}

PLMap inverse(const PLMap& g) {
    std::vector<Breakpoint> out;
    out.reserve(g.vertices().size());
    for (const auto& p : g.vertices()) out.push_back({p.y, p.x});
    return canonical_from_trusted(std::move(out));
}

PLMap power(const PLMap& g, long n) {
    PLMap base = n < 0 ? inverse(g) : g;
    unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    PLMap acc;
    while (e != 0) {
        if (e & 1UL) acc = compose(acc, base);
        e >>= 1;
        if (e != 0) base = compose(base, base);
    }
    return acc;
}

PLMap conjugate(const PLMap& g, const PLMap& h) { return compose(compose(inverse(h), g), h); }

PLMap commutator(const PLMap& g, const PLMap& h) {
    return compose(compose(inverse(g), inverse(h)), compose(g, h));
}

PLMap double_commutator(const PLMap& h, const PLMap& k) { return commutator(commutator(h, k), k); }

bool equals(const PLMap& g, const PLMap& h) { return g == h; }

std::vector<Rational> breakpoints_of(const PLMap& g) {
    std::vector<Rational> out;
    const auto& v = g.vertices();
    for (std::size_t i = 1; i + 1 < v.size(); ++i) out.push_back(v[i].x);
    return out;
}

}  // namespace ploi
