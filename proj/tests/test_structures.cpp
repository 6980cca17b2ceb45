#include "fixtures.hpp"
#include "oracles.hpp"

#include "ploi/structures.hpp"

#include <gtest/gtest.h>

using namespace ploi;
using fixture::alpha_table;
using fixture::beta0_table;
using fixture::beta1_table;
using fixture::beta_k;

namespace {

Interval I(Rational l, Rational r) { return Interval(std::move(l), std::move(r)); }
const Interval kB0(Rational(7, 16), Rational(9, 16));
const Interval kB1(Rational(1, 4), Rational(3, 4));

// Brute force: every pair of signed orbitals over the ball, naive
// element list with pairwise equality instead of hashing.
bool any_interlock(const std::vector<PLMap>& elems) {
    std::vector<std::pair<Rational, Rational>> orb;
    for (const auto& g : elems)
        for (auto& o : oracle::orbitals(g)) orb.push_back(o);
    for (const auto& [al, ar] : orb)
        for (const auto& [bl, br] : orb)
            if (al < bl && bl < ar && ar < br) return true;
    return false;
}

std::vector<PLMap> naive_ball(const std::vector<PLMap>& gens, int radius) {
    std::vector<PLMap> letters;
    for (const auto& g : gens) {
        letters.push_back(g);
        letters.push_back(inverse(g));
    }
    std::vector<PLMap> all{identity()}, layer{identity()};
    for (int r = 0; r < radius; ++r) {
        std::vector<PLMap> next;
        for (const auto& w : layer)
            for (const auto& l : letters) next.push_back(compose(w, l));
        for (const auto& n : next)
            if (std::none_of(all.begin(), all.end(), [&](const PLMap& m) { return equals(m, n); })) all.push_back(n);
        layer = std::move(next);
    }
    return all;
}

PLMap bump(Rational l, Rational r, Rational lift) {
    Rational m = (l + r) / 2;
    std::vector<Breakpoint> pts{{0, 0}, {l, l}, {m, m + lift}, {r, r}, {1, 1}};
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return make_plmap(pts);
}

}  // namespace

TEST(TransitionChain, Predicate) {
    SignedOrbital a(I(0, Rational(1, 2)), alpha_table());
    SignedOrbital b(kB0, beta0_table());
    SignedOrbital c(kB1, beta1_table());
    EXPECT_TRUE(is_transition_chain2(a, b));
    EXPECT_TRUE(is_transition_chain2(b, a));
    EXPECT_FALSE(is_transition_chain2(b, c));
    SignedOrbital d(I(0, Rational(1, 4)), bump(0, Rational(1, 4), Rational(1, 16)));
    SignedOrbital e(I(Rational(1, 2), 1), bump(Rational(1, 2), 1, Rational(1, 8)));
    EXPECT_FALSE(is_transition_chain2(d, e));
}

TEST(TransitionChain, Find) {
    std::vector<PLMap> ab{alpha_table(), beta0_table()};
    auto w = find_transition_chain2(ab, 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->first.orbital(), I(0, Rational(1, 2)));
    EXPECT_EQ(w->first.signature(), alpha_table());
    EXPECT_EQ(w->second.orbital(), kB0);
    EXPECT_EQ(w->second.signature(), beta0_table());
    EXPECT_EQ(w->first_word, Word::generator(0));
    EXPECT_EQ(w->second_word, Word::generator(1));

    std::vector<PLMap> bb{beta0_table(), beta1_table()};
    EXPECT_FALSE(find_transition_chain2(bb, 3));
    EXPECT_FALSE(any_interlock(naive_ball(bb, 3)));

    std::vector<PLMap> id{identity()};
    EXPECT_FALSE(find_transition_chain2(id, 4));
}

TEST(Ball, MatchesNaiveCount) {
    std::vector<PLMap> ab{alpha_table(), beta0_table()};
    EXPECT_EQ(enumerate_ball(ab, 2).size(), naive_ball(ab, 2).size());
    EXPECT_EQ(enumerate_ball(ab, 3).size(), naive_ball(ab, 3).size());
}

TEST(Tower, Predicates) {
    std::vector<TowerEntry> good{{kB0, beta0_table()}, {kB1, beta1_table()}};
    EXPECT_TRUE(is_tower(good));
    EXPECT_TRUE(is_exemplary(good));
    std::vector<TowerEntry> same{{kB0, beta0_table()}, {kB0, beta1_table()}};
    EXPECT_FALSE(is_tower(same));
    std::vector<TowerEntry> incomparable{{I(0, Rational(1, 2)), alpha_table()}, {kB0, beta0_table()}};
    EXPECT_FALSE(is_tower(incomparable));
    std::vector<TowerEntry> three{{kB0, beta0_table()}, {kB1, beta1_table()}, {I(Rational(1, 16), Rational(15, 16)), beta_k(2)}};
    EXPECT_TRUE(is_exemplary(three));
}

TEST(Tower, NonExemplary) {
    // lower signature has an orbital sharing the left end of the upper orbital
    PLMap up = bump(Rational(1, 4), Rational(3, 4), Rational(1, 8));
    PLMap lo = compose(bump(Rational(1, 4), Rational(5, 16), Rational(1, 64)), bump(Rational(7, 16), Rational(9, 16), Rational(1, 64)));
    std::vector<TowerEntry> t{{kB0, lo}, {kB1, up}};
    EXPECT_TRUE(is_tower(t));
    EXPECT_FALSE(is_exemplary(t));
    // or an orbital straddling an end
    PLMap lo2 = compose(bump(Rational(1, 8), Rational(3, 8), Rational(1, 64)), bump(Rational(7, 16), Rational(9, 16), Rational(1, 64)));
    std::vector<TowerEntry> t2{{kB0, lo2}, {kB1, up}};
    EXPECT_TRUE(is_tower(t2));
    EXPECT_FALSE(is_exemplary(t2));
}

TEST(Tower, Conjugation) {
    std::vector<TowerEntry> t{{kB0, beta0_table()}, {kB1, beta1_table()}};
    for (const PLMap& h : {alpha_table(), inverse(alpha_table()), compose(alpha_table(), beta0_table())}) {
        std::vector<TowerEntry> c;
        for (const auto& e : t) c.push_back({induced_orbital(e.orbital, h), conjugate(e.signature, h)});
        EXPECT_TRUE(is_tower(c));
    }
}

TEST(Efficiency, Examples) {
    EXPECT_TRUE(mutually_efficient(beta0_table(), beta1_table()).efficient);
    EXPECT_THROW(mutually_efficient(beta0_table(), alpha_table()), NestingError);
    EXPECT_TRUE(mutually_efficient(identity(), beta0_table()).efficient);
    auto bad = mutually_efficient(beta0_table(), power(beta1_table(), 1));
    EXPECT_TRUE(bad.violations.empty());
}

TEST(Efficiency, Powers) {
    EXPECT_EQ(efficiency_powers(beta0_table(), beta1_table()), std::make_pair(1L, 1L));
    EXPECT_EQ(efficiency_powers(beta0_table(), beta0_table()), std::make_pair(1L, 1L));
    // k has orbital (7/16, 19/32), wider than one beta1 step from 7/16
    PLMap k = make_plmap({{0, 0}, {Rational(7, 16), Rational(7, 16)}, {Rational(1, 2), Rational(17, 32)},
                          {Rational(19, 32), Rational(19, 32)}, {1, 1}});
    auto rep = mutually_efficient(beta1_table(), k);
    EXPECT_FALSE(rep.efficient);
    ASSERT_EQ(rep.violations.size(), 1u);
    EXPECT_EQ(rep.violations[0].container, kB1);
    EXPECT_EQ(rep.violations[0].offending, I(Rational(7, 16), Rational(19, 32)));
    auto p = efficiency_powers(beta1_table(), k);
    EXPECT_EQ(p, std::make_pair(2L, 1L));
    // brute force over small powers in (max, a) order
    std::pair<long, long> best{0, 0};
    for (long m = 1; m <= 4 && best.first == 0; ++m)
        for (long a = 1; a <= m && best.first == 0; ++a)
            for (long b = 1; b <= m; ++b) {
                if (std::max(a, b) != m) continue;
                PLMap ha = power(beta1_table(), a);
                // single fundamental domain of h^a on [7/16,19/32]
                if (oracle::eval_scan(ha, Rational(7, 16)) >= Rational(19, 32)) {
                    best = {a, b};
                    break;
                }
            }
    EXPECT_EQ(best, p);
}

TEST(Efficiency, Cap) {
    PLMap k = make_plmap({{0, 0}, {Rational(1, 4) + Rational(1, 1 << 20), Rational(1, 4) + Rational(1, 1 << 20)},
                          {Rational(1, 2), Rational(9, 16)}, {Rational(3, 4) - Rational(1, 1 << 20), Rational(3, 4) - Rational(1, 1 << 20)}, {1, 1}});
    EXPECT_THROW(efficiency_powers(beta1_table(), k, 8), BudgetExceeded);
}

TEST(CommutatorBound, Examples) {
    SignedOrbital base(kB0, beta0_table());
    SignedOrbital top(kB1, beta1_table());
    EXPECT_EQ(commutator_orbital_bound(base, top), 2);
    for (long n : {2, 3, 4}) EXPECT_TRUE(has_orbital(commutator(beta0_table(), power(beta1_table(), n)), kB0));
    auto orb1 = oracle::orbitals(commutator(beta0_table(), beta1_table()));
    EXPECT_EQ(orb1.front(), std::make_pair(Rational(7, 16), Rational(9, 16)));
    SignedOrbital top2(I(Rational(1, 16), Rational(15, 16)), beta_k(2));
    EXPECT_EQ(commutator_orbital_bound(base, top2), 1);
    EXPECT_GT(oracle::eval_scan(beta_k(2), Rational(7, 16)), Rational(9, 16));
    EXPECT_THROW(commutator_orbital_bound(top, base), NotExemplary);
}

TEST(CommutatorBound, HoldsBeyond) {
    SignedOrbital base(kB0, beta0_table());
    SignedOrbital top(kB1, beta1_table());
    long m = commutator_orbital_bound(base, top);
    for (long n = m; n <= m + 2; ++n) EXPECT_TRUE(has_orbital(commutator(beta0_table(), power(beta1_table(), n)), kB0));
}

TEST(DoubleCommutatorFacts, BetaPairs) {
    for (long i = -1; i <= 1; ++i) {
        PLMap h = beta_k(i), k = beta_k(i + 1);
        ASSERT_TRUE(mutually_efficient(h, k).efficient);
        PLMap f = double_commutator(h, k);
        auto of = orbitals_of_element(f), oh = orbitals_of_element(h), ok = orbitals_of_element(k);
        for (const auto& a : oh)
            for (const auto& c : ok)
                if (c.contains_closure_of(a)) EXPECT_TRUE(has_orbital(f, a));
        for (const auto& a : of) {
            bool found = false;
            for (const auto& c : ok) {
                if (!c.contains_closure_of(a)) continue;
                for (const auto& b : oh) found |= c.contains(b);
            }
            EXPECT_TRUE(found);
        }
    }
}

TEST(ProductOrbitals, NestedOrbitalsSurvive) {
    std::vector<PLMap> bb{beta0_table(), beta1_table()};
    Ball ball = enumerate_ball(bb, 2);
    for (const auto& f : ball.entries())
        for (const auto& g : ball.entries())
            for (const auto& a : orbitals_of_element(f.element))
                for (const auto& b : orbitals_of_element(g.element)) {
                    if (!a.intersects(b)) continue;
                    ASSERT_TRUE(a == b || b.contains_closure_of(a) || a.contains_closure_of(b));
                    if (b.contains_closure_of(a)) {
                        EXPECT_TRUE(has_orbital(compose(f.element, g.element), b));
                        EXPECT_TRUE(has_orbital(compose(g.element, f.element), b));
                    }
                }
}

TEST(Imbalance, Examples) {
    std::vector<PLMap> b{beta0_table()};
    EXPECT_FALSE(imbalance_witness_search(b, 3));
    std::vector<PLMap> ab{alpha_table(), beta0_table()};
    EXPECT_FALSE(imbalance_witness_search(ab, 1));
    PLMap g = make_plmap({{0, 0}, {Rational(1, 4), Rational(1, 8)}, {Rational(1, 2), Rational(1, 2)}, {1, 1}});
    PLMap h = make_plmap({{0, 0}, {Rational(1, 2), Rational(5, 8)}, {Rational(3, 4), Rational(3, 4)}, {1, 1}});
    ASSERT_EQ(orbitals_of_element(g), (std::vector<Interval>{I(0, Rational(1, 2))}));
    ASSERT_EQ(orbitals_of_element(h), (std::vector<Interval>{I(0, Rational(3, 4))}));
    std::vector<PLMap> gh{g, h};
    auto w = imbalance_witness_search(gh, 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->element, g);
    EXPECT_EQ(w->orbital, I(0, Rational(3, 4)));
    EXPECT_TRUE(w->left_end);
}
