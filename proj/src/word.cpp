#include "ploi/word.hpp"

#include "ploi/errors.hpp"

#include <cstdlib>

namespace ploi {

Word::Word(std::vector<Letter> letters) {
    for (const auto& l : letters) append(l.gen, l.exp);
}

std::size_t Word::length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(std::labs(l.exp));
    return n;
}

Word& Word::append(std::size_t gen, long exp) {
    if (exp == 0) return *this;
    if (!letters_.empty() && letters_.back().gen == gen) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
    } else {
        letters_.push_back({gen, exp});
    }
    return *this;
}

Word& Word::append(const Word& w) {
    for (const auto& l : w.letters_) append(l.gen, l.exp);
    return *this;
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->gen, -it->exp);
    return w;
}

std::string Word::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += 'a' + std::to_string(l.gen);
        if (l.exp != 1) s += '^' + std::to_string(l.exp);
    }
    return s;
}

namespace {

// Rank of a single letter in the shortlex alphabet.
std::size_t letter_rank(std::size_t gen, long exp) { return 2 * gen + (exp < 0 ? 1 : 0); }

}  // namespace

std::strong_ordering shortlex_compare(const Word& a, const Word& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    // Walk both expanded sequences in lockstep.
    const auto& la = a.letters();
    const auto& lb = b.letters();
    std::size_t ia = 0, ib = 0;
    long ra = la.empty() ? 0 : std::labs(la[0].exp);
    long rb = lb.empty() ? 0 : std::labs(lb[0].exp);
    while (ia < la.size() && ib < lb.size()) {
        const std::size_t xa = letter_rank(la[ia].gen, la[ia].exp);
        const std::size_t xb = letter_rank(lb[ib].gen, lb[ib].exp);
        if (xa != xb) return xa <=> xb;
        const long step = std::min(ra, rb);
        ra -= step;
        rb -= step;
        if (ra == 0 && ++ia < la.size()) ra = std::labs(la[ia].exp);
        if (rb == 0 && ++ib < lb.size()) rb = std::labs(lb[ib].exp);
    }
    return std::strong_ordering::equal;
}

PLMap evaluate_word(std::span<const PLMap> gens, const Word& w) {
    PLMap acc;
    for (const auto& l : w.letters()) {
        if (l.gen >= gens.size()) throw PreconditionError("word refers to missing generator " + std::to_string(l.gen));
        acc = compose(acc, power(gens[l.gen], l.exp));
    }
    return acc;
}

Rational evaluate_word_at(std::span<const PLMap> gens, const Word& w, const Rational& x) {
    Rational p = x;
    for (const auto& l : w.letters()) {
        if (l.gen >= gens.size()) throw PreconditionError("word refers to missing generator " + std::to_string(l.gen));
        const PLMap step = l.exp > 0 ? gens[l.gen] : inverse(gens[l.gen]);
        for (long k = 0; k < std::labs(l.exp); ++k) p = evaluate(step, p);
    }
    return p;
}

}  // namespace ploi
