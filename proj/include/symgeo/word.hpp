#pragma once

#include "symgeo/common.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace symgeo {

// One syllable of a word in a free group: a generator name with a nonzero
// exponent.
struct Letter {
    std::string gen;
    i64 exp = 0;

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

// A freely reduced word. The class keeps the reduced invariant on every
// mutation: adjacent syllables never share a generator and no exponent is 0.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> raw);

    static Word one() { return Word(); }
    static Word gen(const std::string& g, i64 exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t syllables() const { return letters_.size(); }

    // Sum of |exp| over syllables.
    i64 length() const;

    void push(const std::string& g, i64 exp);
    void push(const Letter& l) { push(l.gen, l.exp); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;

    bool mentions(const std::string& g) const;
    i64 exponent_sum(const std::string& g) const;

    // Replaces every syllable g^e by image^e, freely reducing the result.
    Word substituted(const std::string& g, const Word& image) const;
    Word renamed(const std::map<std::string, std::string>& rename) const;

    // Conjugation-insensitive form: first/last syllables in the same
    // generator are merged away until stable.
    Word cyclically_reduced() const;

    // All syllable-level rotations of the word (size() entries; one entry for
    // the empty word).
    std::vector<Word> rotations() const;

    std::string str() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// Free reduction of an arbitrary syllable sequence.
Word free_reduce(std::span<const Letter> raw);
Word free_reduce(const Word& w);

// u v u^-1 v^-1, freely reduced.
Word commutator(const Word& u, const Word& v);

} // namespace symgeo
