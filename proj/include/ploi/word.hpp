#pragma once

#include "ploi/plmap.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace ploi {

// A syllable g_gen^exp of a word in the generators.
struct Letter {
    std::size_t gen = 0;
    long exp = 0;

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Free-group word in syllable form: adjacent letters have distinct
// generators and every exponent is nonzero.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(std::size_t gen, long exp = 1) { return Word({{gen, exp}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    // Letter count with each syllable g^e contributing |e|.
    std::size_t length() const;

    // Appends g_gen^exp, merging or cancelling with the last syllable.
    Word& append(std::size_t gen, long exp);
    Word& append(const Word& w);
    Word inverse() const;

    // e.g. "a0^2 a1^-1"; the empty word is "1".
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// Shortlex order on the expanded letter sequence with letters ordered
// g0 < g0^-1 < g1 < g1^-1 < ...
std::strong_ordering shortlex_compare(const Word& a, const Word& b);

PLMap evaluate_word(std::span<const PLMap> gens, const Word& w);
Rational evaluate_word_at(std::span<const PLMap> gens, const Word& w, const Rational& x);

}  // namespace ploi
