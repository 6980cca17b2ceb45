#pragma once

#include "ploi/builders.hpp"
#include "ploi/structures.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ploi {

// The six orbital classes of a two-generator group <a, b>. Lower-case
// doubled letters mark an inconsistent realization of both ends.
enum class OrbitalType { AB, Ab, aB, aabb, aab, abb };

std::string_view to_string(OrbitalType t);
OrbitalType orbital_type_from(std::string_view text);
bool is_inconsistent(OrbitalType t);

struct TypedOrbital {
    Interval orbital;
    OrbitalType type;
    friend bool operator==(const TypedOrbital&, const TypedOrbital&) = default;
};

using Census = std::vector<TypedOrbital>;

// Throws ImbalanceError when some generator realizes exactly one end of a
// component, or when the realization pattern is impossible in a balanced
// group.
Census classify_orbital_types(const PLMap& a, const PLMap& b);

struct StageRecord {
    std::string label;
    std::vector<std::pair<std::string, long>> powers;
    Census before;
    Census after;
};

struct PipelineTrace {
    std::vector<StageRecord> stages;
};

class TracedBudgetExceeded : public BudgetExceeded {
public:
    TracedBudgetExceeded(const std::string& what, PipelineTrace trace)
        : BudgetExceeded(what), trace_(std::move(trace)) {}
    const PipelineTrace& trace() const { return trace_; }

private:
    PipelineTrace trace_;
};

struct EmbedConfig {
    long max_power = long{1} << 20;
    int stage_cap = 12;
    int retry_cap = 10;
    std::size_t spanning_len = 8;
    std::size_t chain_radius = 2;
    std::size_t max_elements = kDefaultMaxElements;
};

struct MechanismResult {
    PLMap b;
    long j = 0;
    long k = 0;
};

// b' = [a^j, b^k] with j, k taken from the clearing criteria and raised to
// at least min_j, min_k. Throws NoInconsistentOrbital.
MechanismResult mechanism_step(const PLMap& a, const PLMap& b, long min_j = 1, long min_k = 1,
                               long max_power = long{1} << 20);

struct NormalizeResult {
    PLMap a;
    PLMap b;
    PipelineTrace trace;
    bool swapped = false;  // roles were exchanged to turn abb into aab
};

bool census_normalized(const Census& c);
NormalizeResult normalize_orbital_types(const PLMap& a, const PLMap& b, const EmbedConfig& cfg = {});

// A conjugate of b with one orbital containing the fixed set of a in A.
PLMap spanning_conjugate(const PLMap& a, const PLMap& b, const Interval& a_orbital, std::size_t search_budget);

struct ChainSplitResult {
    PLMap a1;
    PLMap b1;
    PipelineTrace trace;
    std::size_t rho_length = 0;  // r
    std::size_t psi_length = 0;  // s
};

ChainSplitResult chain_split(const PLMap& a, const PLMap& b, const EmbedConfig& cfg = {});

// Empty when the four output properties hold for <a1, b1> relative to the
// orbital A; otherwise one message per failed property.
std::vector<std::string> check_chain_split(const PLMap& a1, const PLMap& b1, const Interval& a_orbital);

struct ExtractResult {
    PLMap a;
    PLMap gamma0;
    BCertificate cert;
    PipelineTrace trace;
};

ExtractResult extract_b(const PLMap& a, const PLMap& b, const EmbedConfig& cfg = {});

// hull_cleared_by between consecutive conjugates of gamma0 by powers of a
// for i in [lo, hi].
bool b_window_holds(const PLMap& a, const PLMap& gamma0, long lo = -2, long hi = 2);

GeneratorFamily tower_to_wn(const Tower& tower, long efficiency_cap = 64);

struct WWitnessConfig {
    std::size_t max_height = 2;
    std::size_t radius = 4;
    std::size_t max_elements = kDefaultMaxElements;
    long max_power = 64;
    std::size_t conjugator_limit = 2000;
};

struct WWitnessResult {
    std::vector<GeneratorFamily> families;  // one per height, tallest first
    std::vector<std::string> report;
    bool complete = false;
    bool used_depth_one = false;
};

WWitnessResult w_witness(std::span<const PLMap> gens, const WWitnessConfig& cfg = {});

}  // namespace ploi
