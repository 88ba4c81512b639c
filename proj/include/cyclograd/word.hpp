#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cyclograd {

// Word in the free monoid on n generators.  Letters are 1-based indices in [1, n];
// the empty word is the monoid unit.  Ordering is graded: first by length, then
// lexicographically, which is the canonical term order used everywhere.
struct Word {
    unsigned n = 0;
    std::vector<unsigned> letters;

    Word() = default;
    explicit Word(unsigned gens) : n(gens) {}
    Word(unsigned gens, std::vector<unsigned> ls) : n(gens), letters(std::move(ls)) { validate(); }

    void validate() const {
        for (unsigned l : letters)
            if (l < 1 || l > n) throw std::invalid_argument("word letter out of range");
    }

    static Word unit(unsigned gens) { return Word(gens); }
    static Word gen(unsigned gens, unsigned j) {
        if (j < 1 || j > gens) throw std::invalid_argument("generator index out of range");
        return Word(gens, {j});
    }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word concat(const Word& o) const {
        if (n != o.n) throw std::invalid_argument("generator count mismatch");
        Word w(n);
        w.letters.reserve(size() + o.size());
        w.letters = letters;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }

    Word subword(std::size_t from, std::size_t len) const {
        Word w(n);
        w.letters.assign(letters.begin() + from, letters.begin() + from + len);
        return w;
    }

    Word reversed() const {
        Word w(n);
        w.letters.assign(letters.rbegin(), letters.rend());
        return w;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.n == b.n && a.letters == b.letters; }

    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        if (auto c = a.letters <=> b.letters; c != 0) return c;
        return a.n <=> b.n;
    }
};

// Plain lexicographic comparison, ignoring length grading.
inline std::strong_ordering lex_compare(const Word& a, const Word& b) {
    return a.letters <=> b.letters;
}

// Rotate right by `steps`: letter at position t moves to (t + steps) mod size.
// With steps = 1, (i0,...,ik) becomes (ik, i0, ..., i(k-1)).  Negative steps
// rotate left.  The empty word is fixed.
inline Word cyclic_rotate(const Word& w, long steps) {
    if (w.empty()) return w;
    long p = static_cast<long>(w.size());
    long s = ((steps % p) + p) % p;
    Word r(w.n);
    r.letters.resize(w.size());
    for (long t = 0; t < p; ++t) r.letters[(t + s) % p] = w.letters[t];
    return r;
}

// Least m in {1, ..., size} with letters[s] == letters[t] whenever s = t (mod m),
// i.e. the word is a truncation of an m-periodic sequence.  The period need not
// divide the length: cyclic_period of (1,2,1) is 2, of (1,1,2) is 3, of
// (1,2,1,2) is 2.  Rotation by the period fixes the word exactly when the
// period divides the length.  Defined as 1 on the empty word for convenience.
inline unsigned cyclic_period(const Word& w) {
    std::size_t p = w.size();
    if (p == 0) return 1;
    for (std::size_t m = 1; m < p; ++m) {
        bool ok = true;
        for (std::size_t s = m; s < p && ok; ++s)
            if (w.letters[s] != w.letters[s - m]) ok = false;
        if (ok) return static_cast<unsigned>(m);
    }
    return static_cast<unsigned>(p);
}

} // namespace cyclograd
