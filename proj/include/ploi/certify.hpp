#pragma once

#include "ploi/serialize.hpp"

#include <string>
#include <vector>

namespace ploi {

// Re-verification of serialized witnesses. Every check is recomputed from
// the raw maps in the record using only map arithmetic and orbit dynamics;
// claimed flags in the record are compared against the recomputation.
struct Verdict {
    bool accepted = false;
    std::vector<std::string> reasons;  // why the record was rejected
};

enum class CertKind { Wreath, B, Tower, Chain };

CertKind cert_kind_from(std::string_view text);

// A wreath record or a family bundle.
Verdict certify_wreath(const Json& j);
// A B certificate record, or an extract_b result embedding one.
Verdict certify_b(const Json& j);
Verdict certify_tower(const Json& j);
Verdict certify_chain(const Json& j);
Verdict certify(CertKind kind, const Json& j);

}  // namespace ploi
