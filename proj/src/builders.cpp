#include "ploi/builders.hpp"

#include <algorithm>
#include <map>

namespace ploi {

PLMap alpha() {
    static const PLMap a = make_plmap({{0, 0},
                                       {Rational(1, 4), Rational(1, 16)},
                                       {Rational(7, 16), Rational(1, 4)},
                                       {Rational(9, 16), Rational(3, 4)},
                                       {Rational(3, 4), Rational(15, 16)},
                                       {1, 1}});
    return a;
}

PLMap beta0() {
    static const PLMap b = make_plmap({{0, 0},
                                       {Rational(7, 16), Rational(7, 16)},
                                       {Rational(15, 32), Rational(1, 2)},
                                       {Rational(1, 2), Rational(17, 32)},
                                       {Rational(9, 16), Rational(9, 16)},
                                       {1, 1}});
    return b;
}

PLMap beta(long k) { return k == 0 ? beta0() : conjugate(beta0(), power(alpha(), k)); }

PLMap rescale_insert(const PLMap& g, const Interval& target) {
    const Rational& l = target.left();
    const Rational w = target.right() - target.left();
    std::vector<Breakpoint> pts;
    if (l > 0) pts.push_back({0, 0});
    for (const auto& v : g.vertices()) pts.push_back({l + w * v.x, l + w * v.y});
    if (target.right() < 1) pts.push_back({1, 1});
    return make_plmap(pts);
}

WreathCert WreathCert::check(std::vector<PLMap> levels) {
    WreathCert c;
    c.levels = std::move(levels);
    for (std::size_t i = 0; i + 1 < c.levels.size(); ++i) {
        const PLMap& lo = c.levels[i];
        c.checks.push_back(!lo.is_identity() && support_cleared_by(lo, c.levels[i + 1]));
    }
    return c;
}

bool WreathCert::valid() const {
    if (levels.empty()) return false;
    if (levels.back().is_identity()) return false;
    if (checks.size() + 1 != levels.size()) return false;
    return std::all_of(checks.begin(), checks.end(), [](bool b) { return b; });
}

BCertificate bcert_check(const PLMap& omega0, const PLMap& gamma) {
    BCertificate c{omega0, gamma, conjugate(omega0, gamma), support_hull(omega0), false, omega0.is_identity()};
    if (!c.trivial_omega0) c.cleared = hull_cleared_by(c.omega0, c.omega1);
    return c;
}

std::string_view to_string(FamilyLabel label) {
    switch (label) {
        case FamilyLabel::Gamma: return "GAMMA";
        case FamilyLabel::Upsilon: return "UPSILON";
        case FamilyLabel::Beta: return "BETA";
        case FamilyLabel::Wn: return "WN";
        case FamilyLabel::WTruncation: return "W_TRUNCATION";
    }
    return "?";
}

FamilyLabel family_label_from(std::string_view text) {
    for (auto l : {FamilyLabel::Gamma, FamilyLabel::Upsilon, FamilyLabel::Beta, FamilyLabel::Wn,
                   FamilyLabel::WTruncation})
        if (to_string(l) == text) return l;
    throw ParseError("unknown family label '" + std::string(text) + "'");
}

bool GeneratorFamily::valid() const {
    if (blocks.empty() || !blocks_disjoint) return false;
    return std::all_of(blocks.begin(), blocks.end(), [](const FamilyBlock& b) { return b.cert.valid(); });
}

std::vector<PLMap> GeneratorFamily::maps() const {
    std::vector<PLMap> out;
    for (const auto& m : members) out.push_back(m.map);
    return out;
}

bool blocks_pairwise_disjoint(const GeneratorFamily& family) {
    for (std::size_t p = 0; p < family.blocks.size(); ++p)
        for (std::size_t q = p + 1; q < family.blocks.size(); ++q)
            for (auto i : family.blocks[p].members)
                for (auto j : family.blocks[q].members)
                    if (!supports_disjoint(family.members.at(i).map, family.members.at(j).map)) return false;
    return true;
}

void recheck(GeneratorFamily& family) {
    for (auto& b : family.blocks) {
        std::vector<PLMap> levels;
        for (auto i : b.members) levels.push_back(family.members.at(i).map);
        b.cert = WreathCert::check(std::move(levels));
    }
    family.blocks_disjoint = blocks_pairwise_disjoint(family);
}

namespace {

GeneratorFamily single_block(FamilyLabel label, std::vector<FamilyMember> members) {
    GeneratorFamily f;
    f.label = label;
    f.members = std::move(members);
    FamilyBlock b;
    for (std::size_t i = 0; i < f.members.size(); ++i) b.members.push_back(i);
    f.blocks.push_back(std::move(b));
    recheck(f);
    return f;
}

// Memoized beta(k); the families reuse the same conjugates many times.
class BetaCache {
public:
    const PLMap& get(long k) {
        auto it = cache_.find(k);
        if (it == cache_.end()) it = cache_.emplace(k, beta(k)).first;
        return it->second;
    }

private:
    std::map<long, PLMap> cache_;
};

}  // namespace

GeneratorFamily wn_generators(long n) {
    if (n < 1) throw PreconditionError("wn_generators needs n >= 1");
    std::vector<FamilyMember> m;
    for (long i = 0; i < n; ++i) m.push_back({beta(i), {i}});
    return single_block(FamilyLabel::Wn, std::move(m));
}

GeneratorFamily beta_family(long lo, long hi) {
    if (lo > hi) throw PreconditionError("beta_family needs lo <= hi");
    std::vector<FamilyMember> m;
    for (long k = lo; k <= hi; ++k) m.push_back({beta(k), {k}});
    return single_block(FamilyLabel::Beta, std::move(m));
}

GeneratorFamily gamma_family(long n) {
    if (n < 1) throw PreconditionError("gamma_family needs n >= 1");
    BetaCache b;
    GeneratorFamily f;
    f.label = FamilyLabel::Gamma;
    for (long j = 1; j <= n; ++j) {
        FamilyBlock blk;
        for (long i = 1; i <= j; ++i) {
            blk.members.push_back(f.members.size());
            f.members.push_back({conjugate(b.get(i), b.get(j + 1)), {i, j}});
        }
        f.blocks.push_back(std::move(blk));
    }
    recheck(f);
    return f;
}

GeneratorFamily upsilon_family(long n) {
    if (n < 1) throw PreconditionError("upsilon_family needs n >= 1");
    BetaCache b;
    GeneratorFamily f;
    f.label = FamilyLabel::Upsilon;
    for (long i = 1; i <= n; ++i) {
        const PLMap conj = power(b.get(-1), i);
        FamilyBlock blk;
        for (long j = 1; j <= i; ++j) {
            blk.members.push_back(f.members.size());
            f.members.push_back({conjugate(b.get(-i + j - 2), conj), {i, j}});
        }
        f.blocks.push_back(std::move(blk));
    }
    recheck(f);
    return f;
}

WreathInsertion wreath_insert(std::span<const PLMap> gens) {
    const Interval slot(Rational(7, 16), Rational(9, 16));
    WreathInsertion w;
    w.top = beta(1);
    std::optional<ClosedInterval> hull;
    for (const auto& g : gens) {
        w.inserted.push_back(rescale_insert(g, slot));
        if (auto h = support_hull(w.inserted.back())) {
            if (!hull) hull = h;
            hull->lo = std::min(hull->lo, h->lo);
            hull->hi = std::max(hull->hi, h->hi);
        }
    }
    if (hull) {
        const auto orb = orbital_containing(w.top, hull->lo);
        w.certified = orb && orb->contains(hull->hi) && evaluate(w.top, hull->lo) >= hull->hi;
    }
    return w;
}

}  // namespace ploi
