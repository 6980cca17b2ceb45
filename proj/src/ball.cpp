#include "ploi/ball.hpp"

#include "ploi/errors.hpp"

namespace ploi {

Ball::Ball(std::vector<BallEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].element, i);
}

std::optional<Word> Ball::word_of(const PLMap& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].word;
}

std::vector<PLMap> Ball::elements() const {
    std::vector<PLMap> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.element);
    return out;
}

Ball enumerate_ball(std::span<const PLMap> gens, std::size_t radius, std::size_t max_elements) {
    std::vector<PLMap> steps;
    for (const auto& g : gens) {
        steps.push_back(g);
        steps.push_back(inverse(g));
    }
    std::map<PLMap, std::size_t> seen;
    std::vector<BallEntry> out{{identity(), Word{}}};
    seen.emplace(identity(), 0);
    std::size_t level_begin = 0;
    for (std::size_t depth = 0; depth < radius; ++depth) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::size_t s = 0; s < steps.size(); ++s) {
                PLMap next = compose(out[i].element, steps[s]);
                if (seen.contains(next)) continue;
                if (out.size() >= max_elements)
                    throw BudgetExceeded("word ball exceeds " + std::to_string(max_elements) + " elements");
                Word w = out[i].word;
                w.append(s / 2, s % 2 == 0 ? 1 : -1);
                seen.emplace(next, out.size());
                out.push_back({std::move(next), std::move(w)});
            }
        }
        level_begin = level_end;
        if (level_begin == out.size()) break;
    }
    return Ball(std::move(out));
}

}  // namespace ploi
