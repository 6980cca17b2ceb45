#pragma once

#include "ploi/structures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ploi {

// Longest exemplary tower among the signed orbitals of the ball, capped at
// target_height. Candidates are ordered by signature word (shortlex), then
// by orbital left end; chains compare lexicographically from the bottom.
std::optional<Tower> tower_search(const Ball& ball, std::size_t target_height);
std::optional<Tower> tower_search(std::span<const PLMap> gens, std::size_t radius, std::size_t target_height,
                                  std::size_t max_elements = kDefaultMaxElements);

// Exemplary towers of exactly the given height, in search order.
std::vector<Tower> exemplary_towers(const Ball& ball, std::size_t height, std::size_t limit);

struct AnalyzeConfig {
    std::size_t radius = 3;
    std::size_t target_height = 4;
    std::optional<std::size_t> threshold;  // flag non-solvability above this height
    std::size_t commutator_samples = 256;
    std::size_t max_elements = kDefaultMaxElements;
};

struct DerivedSampling {
    std::size_t sampled = 0;
    std::size_t violations = 0;  // commutators with a depth-one group orbital
    std::vector<Interval> depth_one_orbitals;
};

struct AnalysisReport {
    static constexpr int kSchemaVersion = 1;

    std::size_t radius = 0;
    std::size_t element_count = 0;
    std::vector<Interval> group_orbitals;
    std::optional<TransitionChainWitness> chain;
    std::optional<Tower> max_tower;
    std::size_t depth_lower_bound = 0;
    std::optional<ImbalanceWitness> imbalance;
    std::optional<std::size_t> threshold;
    bool nonsolvability_witness = false;
    DerivedSampling derived;
    std::vector<std::string> notes;
};

AnalysisReport analyze(std::span<const PLMap> gens, const AnalyzeConfig& cfg = {});

// Re-runs every embedded witness through its checker; empty when all pass.
std::vector<std::string> verify_report(const AnalysisReport& report, std::span<const PLMap> gens);

}  // namespace ploi
