#pragma once

#include "ploi/dynamics.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ploi {

PLMap alpha();
PLMap beta0();
// beta0 conjugated by alpha^k
PLMap beta(long k);

// Identity off the target; inside, the affine copy of g carried by
// phi(t) = l + (r - l) t.
PLMap rescale_insert(const PLMap& g, const Interval& target);

// Adjacent-level checks for an iterated wreath product. Level i passes when
// it is not the identity and support_cleared_by(levels[i], levels[i+1]).
struct WreathCert {
    std::vector<PLMap> levels;  // bottom to top
    std::vector<bool> checks;   // one per adjacent pair

    static WreathCert check(std::vector<PLMap> levels);
    bool valid() const;
};

struct BCertificate {
    PLMap omega0;
    PLMap gamma;
    PLMap omega1;
    std::optional<ClosedInterval> hull;
    bool cleared = false;
    bool trivial_omega0 = false;
};

BCertificate bcert_check(const PLMap& omega0, const PLMap& gamma);

enum class FamilyLabel { Gamma, Upsilon, Beta, Wn, WTruncation };

std::string_view to_string(FamilyLabel label);
FamilyLabel family_label_from(std::string_view text);

struct FamilyMember {
    PLMap map;
    std::vector<long> index;  // (i, j) for gamma/upsilon, (k) for beta, (level) otherwise
};

struct FamilyBlock {
    std::vector<std::size_t> members;  // bottom to top
    WreathCert cert;
};

struct GeneratorFamily {
    FamilyLabel label = FamilyLabel::Wn;
    std::vector<FamilyMember> members;
    std::vector<FamilyBlock> blocks;
    bool blocks_disjoint = true;

    bool valid() const;
    std::vector<PLMap> maps() const;
};

// Recomputes block certificates and the pairwise disjointness of blocks.
void recheck(GeneratorFamily& family);
bool blocks_pairwise_disjoint(const GeneratorFamily& family);

GeneratorFamily wn_generators(long n);
// beta_lo, ..., beta_hi as one block
GeneratorFamily beta_family(long lo, long hi);
GeneratorFamily gamma_family(long n);
GeneratorFamily upsilon_family(long n);

// Copies of gens inside (7/16, 9/16) together with beta_1 on top; the flag
// records whether the whole inserted support is cleared by beta_1.
struct WreathInsertion {
    std::vector<PLMap> inserted;
    PLMap top;
    bool certified = false;
};

WreathInsertion wreath_insert(std::span<const PLMap> gens);

}  // namespace ploi
