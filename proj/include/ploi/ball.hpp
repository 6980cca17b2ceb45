#pragma once

#include "ploi/plmap.hpp"
#include "ploi/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ploi {

inline constexpr std::size_t kDefaultMaxElements = 200000;

struct BallEntry {
    PLMap element;
    Word word;  // shortlex-least word of length <= radius
};

// Distinct elements of the word ball, in shortlex order of their words.
class Ball {
public:
    Ball() = default;
    Ball(std::vector<BallEntry> entries);

    const std::vector<BallEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::optional<Word> word_of(const PLMap& g) const;
    std::vector<PLMap> elements() const;

private:
    std::vector<BallEntry> entries_;
    std::map<PLMap, std::size_t> index_;
};

// Breadth-first enumeration with letters tried in the order
// g0, g0^-1, g1, g1^-1, ...; duplicates are dropped by canonical form.
// Throws BudgetExceeded once more than max_elements distinct elements appear.
Ball enumerate_ball(std::span<const PLMap> gens, std::size_t radius,
                    std::size_t max_elements = kDefaultMaxElements);

}  // namespace ploi
