#include "ploi/certify.hpp"

#include <algorithm>

namespace ploi {

namespace {

void reject(Verdict& v, std::string why) { v.reasons.push_back(std::move(why)); }

Verdict finish(Verdict v) {
    v.accepted = v.reasons.empty();
    return v;
}

// Adjacent-level wreath check: level i is not the identity and its support
// sits in fundamental domains of level i+1.
std::vector<bool> level_checks(const std::vector<PLMap>& levels) {
    std::vector<bool> out;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        out.push_back(!levels[i].is_identity() && support_cleared_by(levels[i], levels[i + 1]));
    return out;
}

void check_levels(Verdict& v, const std::vector<PLMap>& levels, const Json& claimed, const std::string& where) {
    if (levels.empty()) {
        reject(v, where + ": no levels");
        return;
    }
    if (levels.back().is_identity()) reject(v, where + ": top level is the identity");
    const auto checks = level_checks(levels);
    for (std::size_t i = 0; i < checks.size(); ++i)
        if (!checks[i]) reject(v, where + ": level " + std::to_string(i) + " is not cleared by level " + std::to_string(i + 1));
    if (claimed.is_object() && claimed.contains("checks")) {
        const auto& c = claimed["checks"];
        if (!c.is_array() || c.size() != checks.size()) {
            reject(v, where + ": claimed checks have the wrong length");
        } else {
            for (std::size_t i = 0; i < checks.size(); ++i)
                if (!c[i].is_boolean() || c[i].get<bool>() != checks[i])
                    reject(v, where + ": claimed check " + std::to_string(i) + " disagrees with recomputation");
        }
    }
}

bool disjoint_supports(const PLMap& g, const PLMap& h) {
    for (const auto& a : orbitals_of_element(g))
        for (const auto& b : orbitals_of_element(h))
            if (a.intersects(b)) return false;
    return true;
}

std::vector<PLMap> maps_of(const Json& arr) {
    if (!arr.is_array()) throw ParseError("levels must be an array");
    std::vector<PLMap> out;
    for (const auto& g : arr) out.push_back(plmap_from_json(g));
    return out;
}

Verdict certify_family(const Json& j) {
    Verdict v;
    std::vector<PLMap> members;
    for (const auto& m : j.at("members")) members.push_back(plmap_from_json(m.at("map")));
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : j.at("blocks")) {
        std::vector<std::size_t> idx;
        for (const auto& i : b.at("members")) {
            if (!i.is_number_unsigned() || i.get<std::size_t>() >= members.size()) throw ParseError("block member out of range");
            idx.push_back(i.get<std::size_t>());
        }
        blocks.push_back(std::move(idx));
    }
    if (blocks.empty()) reject(v, "family has no blocks");
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<PLMap> levels;
        for (auto i : blocks[b]) levels.push_back(members[i]);
        const Json& cert = j["blocks"][b].contains("cert") ? j["blocks"][b]["cert"] : Json();
        check_levels(v, levels, cert, "block " + std::to_string(b));
    }
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t c = b + 1; c < blocks.size(); ++c)
            for (auto i : blocks[b])
                for (auto k : blocks[c])
                    if (!disjoint_supports(members[i], members[k]))
                        reject(v, "blocks " + std::to_string(b) + " and " + std::to_string(c) + " overlap");
    return v;
}

}  // namespace

CertKind cert_kind_from(std::string_view text) {
    if (text == "wreath") return CertKind::Wreath;
    if (text == "b") return CertKind::B;
    if (text == "tower") return CertKind::Tower;
    if (text == "chain") return CertKind::Chain;
    throw ParseError("unknown certificate kind '" + std::string(text) + "'");
}

Verdict certify_wreath(const Json& j) {
    const std::string kind = j.is_object() ? j.value("kind", "") : "";
    Verdict v;
    if (kind == "family") {
        v = certify_family(j);
    } else if (kind == "wreath") {
        check_levels(v, maps_of(j.at("levels")), j, "wreath");
    } else {
        throw ParseError("expected a wreath or family record");
    }
    if (j.contains("valid") && j["valid"].is_boolean() && j["valid"].get<bool>() != v.reasons.empty())
        reject(v, "claimed validity disagrees with recomputation");
    return finish(std::move(v));
}

Verdict certify_b(const Json& in) {
    const Json& j = in.is_object() && in.value("kind", "") == "extract_b" ? in.at("certificate") : in;
    if (!j.is_object() || j.value("kind", "") != "b") throw ParseError("expected a B certificate record");
    Verdict v;
    const PLMap omega0 = plmap_from_json(j.at("omega0"));
    const PLMap gamma = plmap_from_json(j.at("gamma"));
    const PLMap omega1 = compose(compose(inverse(gamma), omega0), gamma);
    if (j.contains("omega1") && !(plmap_from_json(j["omega1"]) == omega1)) reject(v, "omega1 is not the conjugate of omega0");
    const auto hull = support_hull(omega0);
    if (!hull) {
        reject(v, "omega0 is the identity");
        return finish(std::move(v));
    }
    if (j.contains("hull") && !j["hull"].is_null()) {
        const auto h = closed_interval_from_json(j["hull"]);
        if (!(h == *hull)) reject(v, "claimed hull differs from the support of omega0");
    }
    if (!hull_cleared_by(omega0, omega1)) reject(v, "hull of omega0 is not cleared by omega1");
    // the same check at the neighbouring conjugates
    for (long i = -2; i <= 2; ++i) {
        const PLMap lo = conjugate(omega0, power(gamma, i));
        const PLMap up = conjugate(omega0, power(gamma, i + 1));
        if (!hull_cleared_by(lo, up)) reject(v, "window check fails at i = " + std::to_string(i));
    }
    if (j.contains("cleared") && j["cleared"].is_boolean() && j["cleared"].get<bool>() != v.reasons.empty())
        reject(v, "claimed cleared flag disagrees with recomputation");
    return finish(std::move(v));
}

Verdict certify_tower(const Json& j) {
    Verdict v;
    const auto entries = tower_entries_from_json(j);
    if (entries.empty()) reject(v, "empty tower");
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!has_orbital(entries[i].signature, entries[i].orbital))
            reject(v, "entry " + std::to_string(i) + ": interval is not an orbital of its signature");
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        const Interval& a = entries[i].orbital;
        const Interval& b = entries[i + 1].orbital;
        if (!b.contains(a) || a == b) reject(v, "entries " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not properly nested");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto orbs = orbitals_of_element(entries[i].signature);
        for (std::size_t k = i + 1; k < entries.size(); ++k) {
            const Interval& b = entries[k].orbital;
            for (const auto& o : orbs) {
                if (o.contains(b.left()) || o.contains(b.right()))
                    reject(v, "entry " + std::to_string(i) + " has an orbital over an end of entry " + std::to_string(k));
                else if (b.contains(o) && (o.left() == b.left() || o.right() == b.right()))
                    reject(v, "entry " + std::to_string(i) + " has an orbital sharing an end with entry " + std::to_string(k));
            }
        }
    }
    if (j.contains("height") && j["height"].is_number_unsigned() && j["height"].get<std::size_t>() != entries.size())
        reject(v, "claimed height differs from the entry count");
    return finish(std::move(v));
}

Verdict certify_chain(const Json& j) {
    if (!j.is_object() || j.value("kind", "") != "transition_chain2") throw ParseError("expected a transition_chain2 record");
    Verdict v;
    const Interval a = interval_from_json(j.at("first").at("orbital"));
    const Interval b = interval_from_json(j.at("second").at("orbital"));
    const PLMap ga = plmap_from_json(j.at("first").at("signature"));
    const PLMap gb = plmap_from_json(j.at("second").at("signature"));
    if (!has_orbital(ga, a)) reject(v, "first interval is not an orbital of its signature");
    if (!has_orbital(gb, b)) reject(v, "second interval is not an orbital of its signature");
    const Interval& p = a.left() <= b.left() ? a : b;
    const Interval& q = a.left() <= b.left() ? b : a;
    if (!(p.left() < q.left() && q.left() < p.right() && p.right() < q.right())) reject(v, "orbitals do not interlock");
    return finish(std::move(v));
}

Verdict certify(CertKind kind, const Json& j) {
    switch (kind) {
        case CertKind::Wreath: return certify_wreath(j);
        case CertKind::B: return certify_b(j);
        case CertKind::Tower: return certify_tower(j);
        case CertKind::Chain: return certify_chain(j);
    }
    throw ParseError("unknown certificate kind");
}

}  // namespace ploi
