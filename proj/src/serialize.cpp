#include "ploi/serialize.hpp"

namespace ploi {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

const Json& array_at(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

long integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

bool boolean(const Json& j, const char* what) {
    if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

std::string text(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

template <class T, class F>
Json list(const std::vector<T>& xs, F f) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(f(x));
    return out;
}

template <class T>
Json optional_json(const std::optional<T>& x) {
    return x ? to_json(*x) : Json(nullptr);
}

void expect_kind(const Json& j, const char* kind) {
    if (text(field(j, "kind"), "kind") != kind)
        throw ParseError(std::string("expected a record of kind '") + kind + "'");
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) { return Rational::parse(text(j, "rational")); }

Json to_json(const PLMap& g) {
    Json pts = Json::array();
    for (const auto& b : g.vertices()) pts.push_back(Json::array({to_json(b.x), to_json(b.y)}));
    return Json{{"breakpoints", pts}};
}

PLMap plmap_from_json(const Json& j) {
    std::vector<Breakpoint> pts;
    for (const auto& p : array_at(field(j, "breakpoints"), "breakpoints")) {
        if (!p.is_array() || p.size() != 2) throw ParseError("a breakpoint is a pair of rationals");
        pts.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return make_plmap(pts);
}

Json to_json(const Interval& a) { return Json{{"left", to_json(a.left())}, {"right", to_json(a.right())}}; }

Interval interval_from_json(const Json& j) {
    return Interval(rational_from_json(field(j, "left")), rational_from_json(field(j, "right")));
}

Json to_json(const ClosedInterval& c) { return Json::array({to_json(c.lo), to_json(c.hi)}); }

ClosedInterval closed_interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("a closed interval is a pair of rationals");
    ClosedInterval c{rational_from_json(j[0]), rational_from_json(j[1])};
    if (c.hi < c.lo) throw ParseError("closed interval has lo > hi");
    return c;
}

Json to_json(const FixedSet& f) { return list(f.components, [](const ClosedInterval& c) { return to_json(c); }); }

FixedSet fixed_set_from_json(const Json& j) {
    FixedSet f;
    for (const auto& c : array_at(j, "fixed set")) f.components.push_back(closed_interval_from_json(c));
    return f;
}

Json to_json(const Word& w) {
    return list(w.letters(), [](const Letter& l) { return Json{{"gen", l.gen}, {"exp", l.exp}}; });
}

Word word_from_json(const Json& j) {
    std::vector<Letter> letters;
    for (const auto& l : array_at(j, "word")) {
        const long gen = integer(field(l, "gen"), "gen");
        const long exp = integer(field(l, "exp"), "exp");
        if (gen < 0) throw ParseError("generator index must be non-negative");
        if (exp == 0) throw ParseError("word exponents must be nonzero");
        if (!letters.empty() && letters.back().gen == static_cast<std::size_t>(gen))
            throw ParseError("adjacent word letters must use distinct generators");
        letters.push_back({static_cast<std::size_t>(gen), exp});
    }
    return Word(std::move(letters));
}

Json to_json(const SignedOrbital& s) { return Json{{"orbital", to_json(s.orbital())}, {"signature", to_json(s.signature())}}; }

SignedOrbital signed_orbital_from_json(const Json& j) {
    return SignedOrbital(interval_from_json(field(j, "orbital")), plmap_from_json(field(j, "signature")));
}

Json to_json(const TransitionChainWitness& w) {
    return Json{{"kind", "transition_chain2"},
                {"first", to_json(w.first)},
                {"second", to_json(w.second)},
                {"first_word", to_json(w.first_word)},
                {"second_word", to_json(w.second_word)}};
}

TransitionChainWitness chain_witness_from_json(const Json& j) {
    expect_kind(j, "transition_chain2");
    Word fw, sw;
    if (j.contains("first_word")) fw = word_from_json(j["first_word"]);
    if (j.contains("second_word")) sw = word_from_json(j["second_word"]);
    return {signed_orbital_from_json(field(j, "first")), signed_orbital_from_json(field(j, "second")), fw, sw};
}

Json to_json(const Tower& t) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        Json e = to_json(t.entries[i]);
        if (i < t.words.size()) e["word"] = to_json(t.words[i]);
        entries.push_back(std::move(e));
    }
    return Json{{"kind", "tower"}, {"height", t.height()}, {"entries", entries}};
}

std::vector<TowerEntry> tower_entries_from_json(const Json& j) {
    expect_kind(j, "tower");
    std::vector<TowerEntry> out;
    for (const auto& e : array_at(field(j, "entries"), "entries"))
        out.push_back({interval_from_json(field(e, "orbital")), plmap_from_json(field(e, "signature"))});
    return out;
}

Tower tower_from_json(const Json& j) {
    expect_kind(j, "tower");
    Tower t;
    const auto& entries = array_at(field(j, "entries"), "entries");
    bool words = true;
    for (const auto& e : entries) words = words && e.contains("word");
    for (const auto& e : entries) {
        t.entries.push_back(signed_orbital_from_json(e));
        if (words) t.words.push_back(word_from_json(e["word"]));
    }
    if (!is_tower(t.raw())) throw ParseError("entries do not form a tower");
    return t;
}

Json to_json(const ImbalanceWitness& w) {
    return Json{{"kind", "imbalance"},
                {"element", to_json(w.element)},
                {"word", to_json(w.word)},
                {"orbital", to_json(w.orbital)},
                {"end", w.left_end ? "left" : "right"}};
}

ImbalanceWitness imbalance_witness_from_json(const Json& j) {
    expect_kind(j, "imbalance");
    const std::string end = text(field(j, "end"), "end");
    if (end != "left" && end != "right") throw ParseError("imbalance end must be 'left' or 'right'");
    return {plmap_from_json(field(j, "element")), word_from_json(field(j, "word")), interval_from_json(field(j, "orbital")),
            end == "left"};
}

Json to_json(const WreathCert& c) {
    Json checks = Json::array();
    for (bool b : c.checks) checks.push_back(b);
    return Json{{"kind", "wreath"},
                {"levels", list(c.levels, [](const PLMap& g) { return to_json(g); })},
                {"checks", checks},
                {"valid", c.valid()}};
}

Json to_json(const BCertificate& c) {
    return Json{{"kind", "b"},
                {"omega0", to_json(c.omega0)},
                {"gamma", to_json(c.gamma)},
                {"omega1", to_json(c.omega1)},
                {"hull", optional_json(c.hull)},
                {"cleared", c.cleared}};
}

Json to_json(const GeneratorFamily& f) {
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back(Json{{"map", to_json(m.map)}, {"index", m.index}});
    Json blocks = Json::array();
    for (const auto& b : f.blocks) blocks.push_back(Json{{"members", b.members}, {"cert", to_json(b.cert)}});
    return Json{{"kind", "family"},
                {"label", std::string(to_string(f.label))},
                {"members", members},
                {"blocks", blocks},
                {"blocks_disjoint", f.blocks_disjoint},
                {"valid", f.valid()}};
}

GeneratorFamily family_from_json(const Json& j) {
    expect_kind(j, "family");
    GeneratorFamily f;
    f.label = family_label_from(text(field(j, "label"), "label"));
    for (const auto& m : array_at(field(j, "members"), "members")) {
        FamilyMember fm{plmap_from_json(field(m, "map")), {}};
        for (const auto& i : array_at(field(m, "index"), "index")) fm.index.push_back(integer(i, "index"));
        f.members.push_back(std::move(fm));
    }
    for (const auto& b : array_at(field(j, "blocks"), "blocks")) {
        FamilyBlock fb;
        for (const auto& i : array_at(field(b, "members"), "block members")) {
            const long k = integer(i, "block member");
            if (k < 0 || static_cast<std::size_t>(k) >= f.members.size()) throw ParseError("block member out of range");
            fb.members.push_back(static_cast<std::size_t>(k));
        }
        f.blocks.push_back(std::move(fb));
    }
    // certificates are recomputed, never trusted
    recheck(f);
    return f;
}

Json to_json(const Census& c) {
    return list(c, [](const TypedOrbital& t) {
        return Json{{"orbital", to_json(t.orbital)}, {"type", std::string(to_string(t.type))}};
    });
}

Census census_from_json(const Json& j) {
    Census c;
    for (const auto& t : array_at(j, "census"))
        c.push_back({interval_from_json(field(t, "orbital")), orbital_type_from(text(field(t, "type"), "type"))});
    return c;
}

Json to_json(const PipelineTrace& t) {
    Json stages = Json::array();
    for (const auto& s : t.stages) {
        Json powers = Json::array();
        for (const auto& [name, value] : s.powers) powers.push_back(Json::array({name, value}));
        stages.push_back(Json{{"label", s.label},
                              {"powers", powers},
                              {"census_before", to_json(s.before)},
                              {"census_after", to_json(s.after)}});
    }
    return Json{{"stages", stages}};
}

PipelineTrace trace_from_json(const Json& j) {
    PipelineTrace t;
    for (const auto& s : array_at(field(j, "stages"), "stages")) {
        StageRecord r;
        r.label = text(field(s, "label"), "label");
        for (const auto& p : array_at(field(s, "powers"), "powers")) {
            if (!p.is_array() || p.size() != 2) throw ParseError("a power is a [name, value] pair");
            r.powers.emplace_back(text(p[0], "power name"), integer(p[1], "power value"));
        }
        r.before = census_from_json(field(s, "census_before"));
        r.after = census_from_json(field(s, "census_after"));
        t.stages.push_back(std::move(r));
    }
    return t;
}

Json to_json(const ExtractResult& r) {
    return Json{{"kind", "extract_b"},
                {"a", to_json(r.a)},
                {"gamma0", to_json(r.gamma0)},
                {"certificate", to_json(r.cert)},
                {"trace", to_json(r.trace)}};
}

Json to_json(const WWitnessResult& r) {
    return Json{{"kind", "w_witness"},
                {"families", list(r.families, [](const GeneratorFamily& f) { return to_json(f); })},
                {"report", r.report},
                {"complete", r.complete},
                {"used_depth_one", r.used_depth_one}};
}

Json to_json(const AnalysisReport& r) {
    return Json{{"schema_version", AnalysisReport::kSchemaVersion},
                {"radius", r.radius},
                {"element_count", r.element_count},
                {"group_orbitals", list(r.group_orbitals, [](const Interval& a) { return to_json(a); })},
                {"transition_chain", optional_json(r.chain)},
                {"max_tower", optional_json(r.max_tower)},
                {"depth_lower_bound", r.depth_lower_bound},
                {"depth_is_lower_bound", true},
                {"imbalance", optional_json(r.imbalance)},
                {"threshold", r.threshold ? Json(*r.threshold) : Json(nullptr)},
                {"nonsolvability_witness", r.nonsolvability_witness},
                {"derived_sampling",
                 Json{{"sampled", r.derived.sampled},
                      {"violations", r.derived.violations},
                      {"depth_one_orbitals",
                       list(r.derived.depth_one_orbitals, [](const Interval& a) { return to_json(a); })}}},
                {"notes", r.notes}};
}

AnalysisReport report_from_json(const Json& j) {
    if (integer(field(j, "schema_version"), "schema_version") != AnalysisReport::kSchemaVersion)
        throw ParseError("unsupported report schema version");
    if (!boolean(field(j, "depth_is_lower_bound"), "depth_is_lower_bound"))
        throw ParseError("reports may only claim a lower bound on depth");
    auto count = [](const Json& v, const char* what) {
        const long n = integer(v, what);
        if (n < 0) throw ParseError(std::string(what) + " must be non-negative");
        return static_cast<std::size_t>(n);
    };
    AnalysisReport r;
    r.radius = count(field(j, "radius"), "radius");
    r.element_count = count(field(j, "element_count"), "element_count");
    for (const auto& a : array_at(field(j, "group_orbitals"), "group_orbitals")) r.group_orbitals.push_back(interval_from_json(a));
    if (const auto& c = field(j, "transition_chain"); !c.is_null()) r.chain = chain_witness_from_json(c);
    if (const auto& t = field(j, "max_tower"); !t.is_null()) r.max_tower = tower_from_json(t);
    r.depth_lower_bound = count(field(j, "depth_lower_bound"), "depth_lower_bound");
    if (const auto& w = field(j, "imbalance"); !w.is_null()) r.imbalance = imbalance_witness_from_json(w);
    if (const auto& t = field(j, "threshold"); !t.is_null()) r.threshold = count(t, "threshold");
    r.nonsolvability_witness = boolean(field(j, "nonsolvability_witness"), "nonsolvability_witness");
    const auto& d = field(j, "derived_sampling");
    r.derived.sampled = count(field(d, "sampled"), "sampled");
    r.derived.violations = count(field(d, "violations"), "violations");
    for (const auto& a : array_at(field(d, "depth_one_orbitals"), "depth_one_orbitals"))
        r.derived.depth_one_orbitals.push_back(interval_from_json(a));
    for (const auto& n : array_at(field(j, "notes"), "notes")) r.notes.push_back(text(n, "note"));
    return r;
}

std::vector<PLMap> generators_from_json(const Json& j) {
    std::vector<PLMap> out;
    if (j.is_array()) {
        for (const auto& g : j) out.push_back(plmap_from_json(g));
    } else if (j.is_object() && j.contains("breakpoints")) {
        out.push_back(plmap_from_json(j));
    } else if (j.is_object() && j.contains("generators")) {
        for (const auto& g : array_at(j["generators"], "generators")) out.push_back(plmap_from_json(g));
    } else if (j.is_object() && j.value("kind", "") == "family") {
        out = family_from_json(j).maps();
    } else {
        throw ParseError("expected a map, a list of maps, or {\"generators\": [...]}");
    }
    if (out.empty()) throw ParseError("no generators given");
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace ploi
