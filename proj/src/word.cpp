#include "symgeo/word.hpp"

#include <algorithm>

namespace symgeo {

Word::Word(std::vector<Letter> raw) {
    for (const auto& l : raw) push(l.gen, l.exp);
}

Word Word::gen(const std::string& g, i64 exp) {
    Word w;
    w.push(g, exp);
    return w;
}

i64 Word::length() const {
    i64 n = 0;
    for (const auto& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

void Word::push(const std::string& g, i64 exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == g) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back(Letter{g, exp});
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push(it->gen, -it->exp);
    return w;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    for (const auto& l : rhs.letters_) w.push(l.gen, l.exp);
    return w;
}

bool Word::mentions(const std::string& g) const {
    return std::any_of(letters_.begin(), letters_.end(),
                       [&](const Letter& l) { return l.gen == g; });
}

i64 Word::exponent_sum(const std::string& g) const {
    i64 n = 0;
    for (const auto& l : letters_)
        if (l.gen == g) n += l.exp;
    return n;
}

Word Word::substituted(const std::string& g, const Word& image) const {
    Word out;
    for (const auto& l : letters_) {
        if (l.gen != g) {
            out.push(l.gen, l.exp);
            continue;
        }
        i64 times = l.exp > 0 ? l.exp : -l.exp;
        Word piece = l.exp > 0 ? image : image.inverse();
        for (i64 i = 0; i < times; ++i)
            for (const auto& pl : piece.letters()) out.push(pl.gen, pl.exp);
    }
    return out;
}

Word Word::renamed(const std::map<std::string, std::string>& rename) const {
    Word out;
    for (const auto& l : letters_) {
        auto it = rename.find(l.gen);
        out.push(it == rename.end() ? l.gen : it->second, l.exp);
    }
    return out;
}

Word Word::cyclically_reduced() const {
    std::vector<Letter> ls = letters_;
    while (ls.size() >= 2 && ls.front().gen == ls.back().gen) {
        Letter merged{ls.front().gen, ls.front().exp + ls.back().exp};
        ls.erase(ls.begin());
        ls.pop_back();
        if (merged.exp != 0) ls.push_back(merged);
    }
    return Word(std::move(ls));
}

std::vector<Word> Word::rotations() const {
    std::vector<Word> out;
    if (letters_.empty()) {
        out.push_back(Word());
        return out;
    }
    for (size_t i = 0; i < letters_.size(); ++i) {
        std::vector<Letter> rot;
        rot.insert(rot.end(), letters_.begin() + i, letters_.end());
        rot.insert(rot.end(), letters_.begin(), letters_.begin() + i);
        out.push_back(Word(std::move(rot)));
    }
    return out;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += l.gen;
        if (l.exp != 1) s += '^' + std::to_string(l.exp);
    }
    return s;
}

Word free_reduce(std::span<const Letter> raw) {
    Word w;
    for (const auto& l : raw) w.push(l.gen, l.exp);
    return w;
}

Word free_reduce(const Word& w) { return w; }

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

} // namespace symgeo
