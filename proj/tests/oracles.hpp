#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls into the library's composition or dynamics code; the formulas are
// written out piece by piece.

#include "ploi/plmap.hpp"
#include "ploi/structures.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace oracle {

using ploi::Rational;

struct Piece {
    Rational lo, hi;  // [lo, hi), the last piece closed
    Rational slope, intercept;
};

inline const std::vector<Piece>& alpha_pieces() {
    static const std::vector<Piece> p{
        {0, Rational(1, 4), Rational(1, 4), 0},
        {Rational(1, 4), Rational(7, 16), 1, Rational(-3, 16)},
        {Rational(7, 16), Rational(9, 16), 4, Rational(-3, 2)},
        {Rational(9, 16), Rational(3, 4), 1, Rational(3, 16)},
        {Rational(3, 4), 1, Rational(1, 4), Rational(3, 4)},
    };
    return p;
}

inline const std::vector<Piece>& beta0_pieces() {
    static const std::vector<Piece> p{
        {0, Rational(7, 16), 1, 0},
        {Rational(7, 16), Rational(15, 32), 2, Rational(-7, 16)},
        {Rational(15, 32), Rational(1, 2), 1, Rational(1, 32)},
        {Rational(1, 2), Rational(9, 16), Rational(1, 2), Rational(9, 32)},
        {Rational(9, 16), 1, 1, 0},
    };
    return p;
}

inline const std::vector<Piece>& beta1_pieces() {
    static const std::vector<Piece> p{
        {0, Rational(1, 4), 1, 0},
        {Rational(1, 4), Rational(3, 8), 2, Rational(-1, 4)},
        {Rational(3, 8), Rational(1, 2), 1, Rational(1, 8)},
        {Rational(1, 2), Rational(3, 4), Rational(1, 2), Rational(3, 8)},
        {Rational(3, 4), 1, 1, 0},
    };
    return p;
}

inline Rational eval_pieces(const std::vector<Piece>& ps, const Rational& x) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const bool last = i + 1 == ps.size();
        if (ps[i].lo <= x && (x < ps[i].hi || (last && x <= ps[i].hi))) return ps[i].slope * x + ps[i].intercept;
    }
    throw std::out_of_range("point outside [0,1]");
}

// Linear scan over the vertex list.
inline Rational eval_scan(const ploi::PLMap& g, const Rational& x) {
    const auto& v = g.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].x <= x && x <= v[i + 1].x)
            return v[i].y + (v[i + 1].y - v[i].y) * (x - v[i].x) / (v[i + 1].x - v[i].x);
    }
    throw std::out_of_range("point outside [0,1]");
}

inline Rational eval_scan_inverse(const ploi::PLMap& g, const Rational& y) {
    const auto& v = g.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].y <= y && y <= v[i + 1].y)
            return v[i].x + (v[i + 1].x - v[i].x) * (y - v[i].y) / (v[i + 1].y - v[i].y);
    }
    throw std::out_of_range("point outside [0,1]");
}

// Sample points: all vertices of the given maps, their images and
// preimages, and midpoints between consecutive samples.
inline std::vector<Rational> probe_points(std::initializer_list<const ploi::PLMap*> maps) {
    std::vector<Rational> pts{0, 1};
    for (const auto* m : maps)
        for (const auto& b : m->vertices()) {
            pts.push_back(b.x);
            pts.push_back(b.y);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Rational> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.push_back(pts[i]);
        if (i + 1 < pts.size()) out.push_back((pts[i] + pts[i + 1]) / 2);
    }
    return out;
}

inline bool moves(const ploi::PLMap& g, const Rational& x) { return eval_scan(g, x) != x; }

// Orbitals from candidate fixed points: vertices on the diagonal plus the
// zero of y - x on every piece where it changes sign.
inline std::vector<std::pair<Rational, Rational>> orbitals(const ploi::PLMap& g) {
    const auto& v = g.vertices();
    std::vector<std::pair<Rational, Rational>> moved;  // open intervals where g moves
    std::vector<Rational> cand;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].x == v[i].y) cand.push_back(v[i].x);
        if (i + 1 < v.size()) {
            Rational d0 = v[i].y - v[i].x, d1 = v[i + 1].y - v[i + 1].x;
            if ((d0 > 0 && d1 < 0) || (d0 < 0 && d1 > 0)) {
                // the unique t in (0,1) with d0 + t (d1 - d0) = 0
                Rational t = d0 / (d0 - d1);
                cand.push_back(v[i].x + t * (v[i + 1].x - v[i].x));
            }
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
        Rational m = (cand[i] + cand[i + 1]) / 2;
        if (moves(g, m)) moved.emplace_back(cand[i], cand[i + 1]);
    }
    return moved;
}

// Clearing from the oracle orbitals: the closed hull of supp(lower) sits in
// one orbital of upper and its image under upper lies off it.
inline bool hull_cleared(const ploi::PLMap& lower, const ploi::PLMap& upper) {
    const auto low = orbitals(lower);
    if (low.empty()) return false;
    const Rational lo = low.front().first, hi = low.back().second;
    for (const auto& [l, r] : orbitals(upper)) {
        if (!(l < lo && hi < r)) continue;
        const Rational m = (l + r) / 2;
        if (eval_scan(upper, m) > m) return eval_scan(upper, lo) >= hi;
        return eval_scan(upper, hi) <= lo;
    }
    return false;
}

inline bool supports_disjoint(const ploi::PLMap& g, const ploi::PLMap& h) {
    for (const auto& [a, b] : orbitals(g))
        for (const auto& [c, d] : orbitals(h))
            if (a < d && c < b) return false;
    return true;
}

// Exemplarity recomputed from the oracle orbitals.
inline bool exemplary(const ploi::Tower& t) {
    for (std::size_t i = 0; i < t.height(); ++i) {
        const auto orbs = oracle::orbitals(t.entries[i].signature());
        const ploi::Interval& a = t.entries[i].orbital();
        bool own = false;
        for (const auto& [l, r] : orbs) own = own || (l == a.left() && r == a.right());
        if (!own) return false;
        for (std::size_t j = i + 1; j < t.height(); ++j) {
            const ploi::Interval& b = t.entries[j].orbital();
            if (!(b.left() <= a.left() && a.right() <= b.right()) || a == b) return false;
            for (const auto& [l, r] : orbs) {
                if ((l < b.left() && b.left() < r) || (l < b.right() && b.right() < r)) return false;
                if (b.left() <= l && r <= b.right() && (l == b.left() || r == b.right())) return false;
            }
        }
    }
    return true;
}

}  // namespace oracle
