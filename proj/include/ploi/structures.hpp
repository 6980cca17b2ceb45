#pragma once

#include "ploi/ball.hpp"
#include "ploi/dynamics.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ploi {

struct TransitionChainWitness {
    SignedOrbital first;   // the leftmost orbital
    SignedOrbital second;
    Word first_word;
    Word second_word;
};

// a_l < b_l < a_r < b_r after ordering the pair by left endpoint.
bool is_transition_chain2(const SignedOrbital& p, const SignedOrbital& q);

// Signed orbitals of the ball, grouped by element in ball order and left to
// right within an element; returns the first interlocked pair.
std::optional<TransitionChainWitness> find_transition_chain2(std::span<const PLMap> gens, std::size_t max_len,
                                                             std::size_t max_elements = kDefaultMaxElements);
std::optional<TransitionChainWitness> find_transition_chain2(const Ball& ball);

// Unchecked tower entry, as read from a file.
struct TowerEntry {
    Interval orbital;
    PLMap signature;
};

// Chain under inclusion, each orbital an orbital of its signature, equal
// orbitals only with equal signatures, no repeated entries.
bool is_tower(std::span<const TowerEntry> entries);
bool is_exemplary(std::span<const TowerEntry> entries);

struct Tower {
    std::vector<SignedOrbital> entries;  // bottom to top
    std::vector<Word> words;             // provenance, empty when unknown

    std::size_t height() const { return entries.size(); }
    std::vector<TowerEntry> raw() const;
};

struct EfficiencyViolation {
    Interval container;  // orbital of one element
    Interval offending;  // hull of the other's support inside it
};

struct EfficiencyReport {
    bool efficient = true;
    std::vector<EfficiencyViolation> violations;
};

// Throws NestingError unless every overlapping orbital pair is equal or
// properly nested with closures.
void check_nesting(const PLMap& h, const PLMap& k);

EfficiencyReport mutually_efficient(const PLMap& h, const PLMap& k);

// Least exponents (a, b) with h^a, k^b mutually efficient.
std::pair<long, long> efficiency_powers(const PLMap& h, const PLMap& k, long cap = 64);

// Least M with x g2^M > y for [x,y] the hull of supp(g1) in the top orbital;
// the base orbital is then an orbital of [g1, g2^n] for n >= M.
long commutator_orbital_bound(const SignedOrbital& base, const SignedOrbital& top);

struct ImbalanceWitness {
    PLMap element;
    Word word;
    Interval orbital;  // component of the group support
    bool left_end = false;
};

std::optional<ImbalanceWitness> imbalance_witness_search(std::span<const PLMap> gens, std::size_t max_len,
                                                         std::size_t max_elements = kDefaultMaxElements);
std::optional<ImbalanceWitness> imbalance_witness_search(const Ball& ball, std::span<const PLMap> gens);

}  // namespace ploi
