// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "../random_maps.hpp"

#include "ploi/certify.hpp"
#include "ploi/serialize.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

using namespace ploi;
using fixture::alpha_table;
using fixture::beta0_table;
using fixture::beta1_table;

namespace {

// Collects failed sub-checks for one criterion.
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

using Pair = std::pair<Rational, Rational>;
using Pairs = std::vector<Pair>;

Pairs interval_pairs(const std::vector<Interval>& v) {
    Pairs out;
    for (const auto& a : v) out.emplace_back(a.left(), a.right());
    return out;
}

Pair P(long a, long b, long c, long d) { return {Rational(a, b), Rational(c, d)}; }

void tables_against_formulas(Check& c, const PLMap& g, const std::vector<oracle::Piece>& pieces, const std::string& name) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        const Rational mid = midpoint(p.lo, p.hi);
        for (const Rational& x : {p.lo, mid, p.hi})
            c.expect(evaluate(g, x) == p.slope * x + p.intercept, name + " piece " + std::to_string(i) + " at " + x.to_string());
        if (i + 1 < pieces.size()) {
            const auto& q = pieces[i + 1];
            c.expect(p.slope * p.hi + p.intercept == q.slope * q.lo + q.intercept,
                     name + " continuity at " + p.hi.to_string());
        }
    }
}

void c1(Check& c) {
    tables_against_formulas(c, alpha(), oracle::alpha_pieces(), "alpha");
    tables_against_formulas(c, beta0(), oracle::beta0_pieces(), "beta0");
    c.expect(evaluate(alpha(), Rational(1, 4)) == Rational(1, 16), "alpha(1/4) = 1/16");
}

void c2(Check& c) {
    const PLMap b1 = conjugate(beta0(), alpha());
    c.expect(b1 == beta1_table(), "conjugate(beta0, alpha) equals the beta1 table");
    c.expect(b1.vertices() == beta1_table().vertices(), "canonical vertex lists agree");
    for (const auto& p : oracle::beta1_pieces())
        c.expect(evaluate(b1, midpoint(p.lo, p.hi)) == p.slope * midpoint(p.lo, p.hi) + p.intercept, "beta1 piece formula");
    c.expect(evaluate(beta(1), Rational(7, 16)) == Rational(9, 16), "beta1(7/16) = 9/16");
}

void c3(Check& c) {
    c.expect(interval_pairs(orbitals_of_element(beta0())) == Pairs{P(7, 16, 9, 16)}, "orbitals(beta0)");
    const Pairs a{P(0, 1, 1, 2), P(1, 2, 1, 1)};
    c.expect(interval_pairs(orbitals_of_element(alpha())) == a, "orbitals(alpha)");
    c.expect(oracle::orbitals(alpha_table()) == a, "oracle orbitals(alpha)");
    const Pairs b2{P(1, 16, 15, 16)};
    c.expect(interval_pairs(orbitals_of_element(beta(2))) == b2, "orbitals(beta2)");
    c.expect(oracle::orbitals(fixture::beta_k(2)) == b2, "oracle orbitals(beta2)");
}

void c4(Check& c) {
    for (long i = -2; i <= 1; ++i) {
        const PLMap lo = beta(i), up = beta(i + 1);
        const std::string tag = "i = " + std::to_string(i);
        c.expect(hull_cleared_by(lo, up), tag + ": hull_cleared_by");
        c.expect(oracle::hull_cleared(fixture::beta_k(i), fixture::beta_k(i + 1)), tag + ": oracle hull cleared");
        for (long j = -2; j <= 2; ++j)
            for (long k = j + 1; k <= 2; ++k) {
                const PLMap gj = conjugate(lo, power(up, j));
                const PLMap gk = conjugate(lo, power(up, k));
                c.expect(oracle::supports_disjoint(gj, gk), tag + ": disjoint conjugates " + std::to_string(j) + "," + std::to_string(k));
                c.expect(equals(compose(gj, gk), compose(gk, gj)), tag + ": conjugates commute " + std::to_string(j) + "," + std::to_string(k));
            }
    }
}

void c5(Check& c) {
    const PLMap f = double_commutator(beta0(), beta1_table());
    // [[h,k],k] written out directly
    const PLMap h = beta0_table(), k = beta1_table();
    const PLMap hk = compose(compose(compose(inverse(h), inverse(k)), h), k);
    const PLMap direct = compose(compose(compose(inverse(hk), inverse(k)), hk), k);
    c.expect(f == direct, "double_commutator matches direct composition");
    const Pairs expect{P(7, 16, 9, 16), P(9, 16, 21, 32), P(21, 32, 45, 64)};
    c.expect(interval_pairs(orbitals_of_element(f)) == expect, "orbital set of f");
    c.expect(oracle::orbitals(direct) == expect, "oracle orbital set of f");
    for (const auto& [l, r] : oracle::orbitals(direct))
        c.expect(Rational(1, 4) < l && r < Rational(3, 4), "closure inside (1/4,3/4)");
}

void c6(Check& c) {
    const SignedOrbital base(Interval(Rational(7, 16), Rational(9, 16)), beta0());
    const SignedOrbital top(Interval(Rational(1, 4), Rational(3, 4)), beta(1));
    c.expect(commutator_orbital_bound(base, top) == 2, "bound is 2");
    for (long n : {2, 3, 4}) {
        const auto orbs = oracle::orbitals(commutator(beta0_table(), power(beta1_table(), n)));
        c.expect(std::find(orbs.begin(), orbs.end(), P(7, 16, 9, 16)) != orbs.end(), "n = " + std::to_string(n));
    }
}

void c7(Check& c) {
    const std::vector<PLMap> ab{alpha(), beta0()};
    const auto w = find_transition_chain2(ab, 1);
    c.expect(w.has_value(), "chain found in [alpha, beta0]");
    if (w) {
        c.expect(w->first.orbital() == Interval(Rational(0), Rational(1, 2)) && w->first.signature() == alpha_table(),
                 "first signed orbital is ((0,1/2), alpha)");
        c.expect(w->second.orbital() == Interval(Rational(7, 16), Rational(9, 16)) && w->second.signature() == beta0_table(),
                 "second signed orbital is ((7/16,9/16), beta0)");
        // the witness orbitals, recomputed
        const auto oa = oracle::orbitals(w->first.signature());
        const auto ob = oracle::orbitals(w->second.signature());
        c.expect(std::find(oa.begin(), oa.end(), P(0, 1, 1, 2)) != oa.end() && std::find(ob.begin(), ob.end(), P(7, 16, 9, 16)) != ob.end(),
                 "witness orbitals confirmed by oracle");
        const Interval& a = w->first.orbital();
        const Interval& b = w->second.orbital();
        c.expect(a.left() < b.left() && b.left() < a.right() && a.right() < b.right(), "interlocking");
    }
    const std::vector<PLMap> nested{beta0(), beta(1)};
    c.expect(!find_transition_chain2(nested, 3).has_value(), "no chain in [beta0, beta1]");
}

void c8(Check& c) {
    const std::vector<PLMap> ab{alpha(), beta0()};
    const auto t = tower_search(ab, 5, 3);
    c.expect(t.has_value(), "tower found");
    if (!t) return;
    c.expect(t->height() >= 3, "height >= 3");
    c.expect(is_exemplary(t->raw()), "library exemplary check");
    c.expect(oracle::exemplary(*t), "oracle exemplary check");
    c.expect(t->words.size() == t->height(), "words recorded");
    for (std::size_t i = 0; i < t->words.size() && i < t->height(); ++i) {
        c.expect(t->words[i].length() <= 5, "word within radius");
        c.expect(evaluate_word(ab, t->words[i]) == t->entries[i].signature(), "word evaluates to signature");
    }
}

void family_check(Check& c, const GeneratorFamily& fam, const std::string& name) {
    c.expect(fam.valid(), name + " valid");
    for (std::size_t b = 0; b < fam.blocks.size(); ++b) c.expect(fam.blocks[b].cert.valid(), name + " block " + std::to_string(b));
    c.expect(fam.blocks_disjoint && blocks_pairwise_disjoint(fam), name + " blocks disjoint");
    for (std::size_t b = 0; b < fam.blocks.size(); ++b)
        for (std::size_t d = b + 1; d < fam.blocks.size(); ++d)
            for (auto i : fam.blocks[b].members)
                for (auto k : fam.blocks[d].members)
                    c.expect(oracle::supports_disjoint(fam.members[i].map, fam.members[k].map),
                             name + " oracle disjoint blocks " + std::to_string(b) + "," + std::to_string(d));
    c.expect(certify_wreath(to_json(fam)).accepted, name + " re-certified from JSON");
}

void c9(Check& c) {
    family_check(c, gamma_family(3), "gamma(3)");
    family_check(c, upsilon_family(2), "upsilon(2)");
}

void c10(Check& c) {
    const ExtractResult r = extract_b(alpha(), beta0());
    const BCertificate re = bcert_check(r.cert.omega0, r.cert.gamma);
    c.expect(re.cleared, "bcert_check passes");
    c.expect(b_window_holds(r.a, r.gamma0), "window -2..2 holds");
    for (long i = -2; i <= 2; ++i)
        c.expect(oracle::hull_cleared(conjugate(r.gamma0, power(r.a, i)), conjugate(r.gamma0, power(r.a, i + 1))),
                 "oracle window at i = " + std::to_string(i));
    c.expect(certify_b(to_json(r)).accepted, "certify_b accepts the pipeline output");

    Tower t;
    for (long k : {-1L, 0L, 1L}) {
        const PLMap g = beta(k);
        t.entries.emplace_back(orbitals_of_element(g).front(), g);
    }
    const GeneratorFamily w3 = tower_to_wn(t);
    c.expect(w3.members.size() == 3, "three generators");
    c.expect(w3.valid(), "W3 certificate valid");
    c.expect(certify_wreath(to_json(w3)).accepted, "W3 re-certified from JSON");
}

void c11(Check& c) {
    const auto maps = testgen::random_corpus(testgen::kCount, testgen::kSeed);
    c.expect(maps.size() == 1000, "1000 maps");
    const PLMap e = identity();
    std::size_t bad_inv = 0, bad_assoc = 0, bad_idem = 0, bad_json = 0;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const PLMap& g = maps[i];
        if (!(compose(g, inverse(g)) == e && compose(inverse(g), g) == e)) ++bad_inv;
        if (i + 2 < maps.size() && !(compose(compose(g, maps[i + 1]), maps[i + 2]) == compose(g, compose(maps[i + 1], maps[i + 2]))))
            ++bad_assoc;
        if (make_plmap(g.vertices()).vertices() != g.vertices()) ++bad_idem;
        const std::string text = dump(to_json(g));
        if (dump(to_json(plmap_from_json(parse_json(text)))) != text) ++bad_json;
    }
    c.expect(bad_inv == 0, std::to_string(bad_inv) + " inverse-law failures");
    c.expect(bad_assoc == 0, std::to_string(bad_assoc) + " associativity failures");
    c.expect(bad_idem == 0, std::to_string(bad_idem) + " canonicalization failures");
    c.expect(bad_json == 0, std::to_string(bad_json) + " JSON round-trip failures");
}

int certify_exit(const std::filesystem::path& dir, const std::string& kind, const std::string& name, const Json& j) {
    std::ofstream(dir / name) << dump(j);
    const std::string cmd = std::string("'") + PLOI_CLI_PATH + "' certify " + kind + " --file '" + (dir / name).string() + "' >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

void c12(Check& c) {
    const auto dir = std::filesystem::temp_directory_path() / ("ploi_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);

    Json wreath = to_json(WreathCert::check({beta0(), beta(1)}));
    c.expect(certify_exit(dir, "wreath", "wreath_ok.json", wreath) == 0, "intact wreath accepted");
    for (auto& bp : wreath["levels"][1]["breakpoints"])
        if (bp[0] == "3/8") bp[1] = "15/32";
    c.expect(certify_exit(dir, "wreath", "wreath_bad.json", wreath) == 3, "perturbed wreath exits 3");

    const Json b_ok = to_json(bcert_check(beta(1), alpha()));
    c.expect(certify_exit(dir, "b", "b_ok.json", b_ok) == 0, "valid B certificate accepted");
    // alpha^-1 carries beta1 to beta0, whose orbital cannot clear the beta1 hull
    const Json b_bad = to_json(bcert_check(beta(1), inverse(alpha())));
    c.expect(!oracle::hull_cleared(beta1_table(), beta0_table()), "oracle agrees the hull check fails");
    c.expect(certify_exit(dir, "b", "b_bad.json", b_bad) == 3, "failing B hull exits 3");
    std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"alpha and beta0 match their piecewise formulas exactly", c1},
        {"conjugate(beta0, alpha) is beta1 and beta1(7/16) = 9/16", c2},
        {"orbitals of beta0, alpha and beta2", c3},
        {"wreath clearing and disjoint commuting conjugates for beta(i), beta(i+1)", c4},
        {"double commutator of beta0, beta1 has the three expected orbitals", c5},
        {"commutator orbital bound is 2 on the beta0/beta1 tower", c6},
        {"transition chain detection in [alpha, beta0] and absence in [beta0, beta1]", c7},
        {"tower search finds a verified exemplary tower of height >= 3", c8},
        {"gamma(3) and upsilon(2) truncation certificates", c9},
        {"extract_b(alpha, beta0) and tower_to_wn on the beta tower", c10},
        {"group axioms and JSON round-trip on 1000 random maps", c11},
        {"certify rejects corrupted wreath and failing B certificates with exit 3", c12},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << "\n";
        for (const auto& f : c.failures) std::cout << "     " << f << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
