#include "ploi/analyzer.hpp"

#include <algorithm>
#include <functional>

namespace ploi {

namespace {

struct Node {
    Interval orbital;
    std::size_t entry;
};

struct OrbitalDag {
    std::vector<Node> nodes;
    std::vector<std::vector<Interval>> orbitals;  // per ball entry
    std::vector<std::vector<std::size_t>> ups;    // compatible nodes above
    std::vector<std::size_t> reach;               // longest upward path, counting the node
};

// u can sit below v in an exemplary tower
bool compatible(const OrbitalDag& d, const Node& u, const Node& v) {
    const Interval& b = v.orbital;
    if (u.orbital == b || !b.contains(u.orbital)) return false;
    for (const auto& o : d.orbitals[u.entry]) {
        if (o.contains(b.left()) || o.contains(b.right())) return false;
        if (b.contains(o) && (o.left() == b.left() || o.right() == b.right())) return false;
    }
    return true;
}

OrbitalDag build_dag(const Ball& ball) {
    OrbitalDag d;
    for (std::size_t i = 0; i < ball.size(); ++i) {
        d.orbitals.push_back(orbitals_of_element(ball.entries()[i].element));
        for (const auto& o : d.orbitals.back()) d.nodes.push_back({o, i});
    }
    const std::size_t n = d.nodes.size();
    d.ups.resize(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (compatible(d, d.nodes[u], d.nodes[v])) d.ups[u].push_back(v);

    // orbital lengths strictly increase along edges
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return d.nodes[y].orbital.length() < d.nodes[x].orbital.length();
    });
    d.reach.assign(n, 1);
    for (auto u : order)
        for (auto v : d.ups[u]) d.reach[u] = std::max(d.reach[u], d.reach[v] + 1);
    return d;
}

Tower make_tower(const Ball& ball, const OrbitalDag& d, const std::vector<std::size_t>& chain) {
    Tower t;
    for (auto i : chain) {
        const auto& e = ball.entries()[d.nodes[i].entry];
        t.entries.emplace_back(d.nodes[i].orbital, e.element);
        t.words.push_back(e.word);
    }
    return t;
}

// Calls visit on each exemplary chain of the given height in search order
// until it returns false.
void for_each_chain(const OrbitalDag& d, std::size_t height, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> chain;
    bool stop = false;
    std::function<void()> grow = [&]() {
        if (stop) return;
        if (chain.size() == height) {
            stop = !visit(chain);
            return;
        }
        const std::size_t need = height - chain.size();
        auto try_node = [&](std::size_t v) {
            if (d.reach[v] < need) return;
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                if (!compatible(d, d.nodes[chain[i]], d.nodes[v])) return;
            chain.push_back(v);
            grow();
            chain.pop_back();
        };
        if (chain.empty()) {
            for (std::size_t v = 0; v < d.nodes.size() && !stop; ++v) try_node(v);
        } else {
            for (auto v : d.ups[chain.back()]) {
                if (stop) break;
                try_node(v);
            }
        }
    };
    if (height > 0) grow();
}

}  // namespace

std::vector<Tower> exemplary_towers(const Ball& ball, std::size_t height, std::size_t limit) {
    const OrbitalDag d = build_dag(ball);
    std::vector<Tower> out;
    for_each_chain(d, height, [&](const std::vector<std::size_t>& chain) {
        out.push_back(make_tower(ball, d, chain));
        return out.size() < limit;
    });
    return out;
}

std::optional<Tower> tower_search(const Ball& ball, std::size_t target_height) {
    const OrbitalDag d = build_dag(ball);
    std::size_t best = 0;
    for (auto r : d.reach) best = std::max(best, r);
    for (std::size_t h = std::min(best, target_height); h >= 1; --h) {
        std::optional<Tower> found;
        for_each_chain(d, h, [&](const std::vector<std::size_t>& chain) {
            found = make_tower(ball, d, chain);
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<Tower> tower_search(std::span<const PLMap> gens, std::size_t radius, std::size_t target_height,
                                  std::size_t max_elements) {
    return tower_search(enumerate_ball(gens, radius, max_elements), target_height);
}

AnalysisReport analyze(std::span<const PLMap> gens, const AnalyzeConfig& cfg) {
    AnalysisReport r;
    r.radius = cfg.radius;
    r.threshold = cfg.threshold;
    const Ball ball = enumerate_ball(gens, cfg.radius, cfg.max_elements);
    r.element_count = ball.size();
    r.group_orbitals = group_support(gens);

    r.chain = find_transition_chain2(ball);
    if (!r.chain) r.notes.push_back("no transition chain of length two in the radius-" + std::to_string(cfg.radius) + " ball (bounded search)");
    r.max_tower = tower_search(ball, cfg.target_height);
    r.depth_lower_bound = r.max_tower ? r.max_tower->height() : 0;
    if (r.depth_lower_bound < cfg.target_height)
        r.notes.push_back("no exemplary tower taller than " + std::to_string(r.depth_lower_bound) +
                          " in the ball (bounded search); depth is a lower bound only");
    r.imbalance = imbalance_witness_search(ball, gens);
    if (!r.imbalance) r.notes.push_back("no imbalance witness in the ball (bounded search)");
    r.nonsolvability_witness = cfg.threshold && r.depth_lower_bound > *cfg.threshold;

    for (const auto& z : r.group_orbitals) {
        const bool realized = std::any_of(ball.entries().begin(), ball.entries().end(),
                                          [&](const BallEntry& e) { return has_orbital(e.element, z); });
        if (realized) r.derived.depth_one_orbitals.push_back(z);
    }
    const auto& es = ball.entries();
    for (std::size_t i = 0; i < es.size() && r.derived.sampled < cfg.commutator_samples; ++i)
        for (std::size_t j = i + 1; j < es.size() && r.derived.sampled < cfg.commutator_samples; ++j) {
            const PLMap c = commutator(es[i].element, es[j].element);
            ++r.derived.sampled;
            for (const auto& z : r.derived.depth_one_orbitals)
                if (has_orbital(c, z)) {
                    ++r.derived.violations;
                    break;
                }
        }
    return r;
}

std::vector<std::string> verify_report(const AnalysisReport& report, std::span<const PLMap> gens) {
    std::vector<std::string> failures;
    if (report.group_orbitals != group_support(gens)) failures.push_back("group orbitals differ from the generators");
    if (report.chain) {
        const auto& c = *report.chain;
        if (!is_transition_chain2(c.first, c.second)) failures.push_back("chain witness is not interlocked");
        if (!(evaluate_word(gens, c.first_word) == c.first.signature()) ||
            !(evaluate_word(gens, c.second_word) == c.second.signature()))
            failures.push_back("chain witness words do not evaluate to the signatures");
    }
    if (report.max_tower) {
        const auto& t = *report.max_tower;
        if (!is_exemplary(t.raw())) failures.push_back("tower witness is not exemplary");
        if (t.height() != report.depth_lower_bound) failures.push_back("depth bound disagrees with the tower");
        for (std::size_t i = 0; i < t.words.size() && i < t.height(); ++i)
            if (!(evaluate_word(gens, t.words[i]) == t.entries[i].signature()))
                failures.push_back("tower word " + std::to_string(i) + " does not evaluate to its signature");
    } else if (report.depth_lower_bound != 0) {
        failures.push_back("depth bound without a tower");
    }
    if (report.imbalance) {
        const auto& w = *report.imbalance;
        const auto e = realizes_end(w.element, w.orbital);
        if (e.left == e.right || e.left != w.left_end) failures.push_back("imbalance witness does not realize exactly one end");
        if (!(evaluate_word(gens, w.word) == w.element)) failures.push_back("imbalance word does not evaluate to its element");
    }
    return failures;
}

}  // namespace ploi
