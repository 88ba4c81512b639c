#include "cyclograd/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace cyclograd {

namespace {

struct RawTerm {
    Scalar coeff;
    std::vector<unsigned> letters;
};

class Parser {
public:
    Parser(const std::string& text, unsigned n) : text_(text), limit_(n) {}

    std::vector<RawTerm> poly() {
        std::vector<RawTerm> terms;
        skip();
        bool negate = consume_if('-');
        terms.push_back(signed_term(negate));
        skip();
        while (!at_end()) {
            bool minus = consume_if('-');
            if (!minus && !consume_if('+')) fail("expected '+' or '-'");
            terms.push_back(signed_term(minus));
            skip();
        }
        return terms;
    }

    std::vector<unsigned> bare_word() {
        skip();
        std::vector<unsigned> w = word();
        skip();
        if (!at_end()) fail("trailing input after word");
        return w;
    }

    unsigned max_seen() const { return max_seen_; }

private:
    RawTerm signed_term(bool negate) {
        RawTerm t = term();
        if (negate) t.coeff = -t.coeff;
        return t;
    }

    RawTerm term() {
        skip();
        if (at_end()) fail("expected term");
        if (peek() == 'x') return {Scalar(1), word()};
        Scalar c = coeff();
        std::vector<unsigned> w;
        skip();
        if (consume_if('*')) w = word();
        return {c, std::move(w)};
    }

    Scalar coeff() {
        skip();
        if (consume_if('(')) {
            Rat re = rat();
            Rat im(0);
            skip();
            if (peek_is('+') || peek_is('-')) {
                bool minus = consume_if('-');
                if (!minus) consume_if('+');
                im = rat();
                if (minus) im = Rat(-im);
                skip();
                if (!consume_if('i')) fail("expected 'i'");
            }
            skip();
            if (!consume_if(')')) fail("expected ')'");
            return Scalar(re, im);
        }
        Rat r = rat();
        skip();
        if (consume_if('i')) return Scalar(Rat(0), r);
        return Scalar(r);
    }

    Rat rat() {
        skip();
        bool neg = consume_if('-');
        mpz_class num(digits("expected number"));
        skip();
        if (consume_if('/')) {
            skip();
            std::size_t den_pos = pos_;
            mpz_class den(digits("expected denominator"));
            if (sgn(den) == 0) fail_at(den_pos, "zero denominator");
            Rat q(num, den);
            q.canonicalize();
            return neg ? Rat(-q) : q;
        }
        Rat q(num);
        return neg ? Rat(-q) : q;
    }

    std::vector<unsigned> word() {
        skip();
        if (consume_if('1')) return {};
        std::vector<unsigned> letters;
        letters.push_back(gen());
        skip();
        while (consume_if('.')) {
            letters.push_back(gen());
            skip();
        }
        return letters;
    }

    unsigned gen() {
        skip();
        if (!consume_if('x')) fail("expected generator");
        std::size_t idx_pos = pos_;
        std::string ds = digits("expected generator index");
        mpz_class idx(ds);
        if (sgn(idx) <= 0) fail_at(idx_pos, "generator indices start at 1");
        if (!idx.fits_uint_p()) fail_at(idx_pos, "generator index too large");
        unsigned g = static_cast<unsigned>(idx.get_ui());
        if (limit_ != 0 && g > limit_)
            fail_at(idx_pos, "generator index exceeds " + std::to_string(limit_));
        max_seen_ = std::max(max_seen_, g);
        return g;
    }

    std::string digits(const char* msg) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(msg);
        std::string ds;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ds.push_back(text_[pos_++]);
        return ds;
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool peek_is(char c) const { return !at_end() && peek() == c; }
    bool consume_if(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t p, const std::string& msg) const { throw ParseError(p, msg); }

    const std::string& text_;
    unsigned limit_;
    unsigned max_seen_ = 0;
    std::size_t pos_ = 0;
};

Polynomial build(const std::vector<RawTerm>& terms, unsigned n) {
    Polynomial p(n);
    for (const RawTerm& t : terms) p.add_term(Word(n, t.letters), t.coeff);
    return p;
}

} // namespace

Polynomial parse_polynomial(const std::string& text, unsigned n) {
    Parser ps(text, n);
    std::vector<RawTerm> terms = ps.poly();
    return build(terms, n != 0 ? n : ps.max_seen());
}

Word parse_word(const std::string& text, unsigned n) {
    Parser ps(text, n);
    std::vector<unsigned> letters = ps.bare_word();
    return Word(n != 0 ? n : ps.max_seen(), std::move(letters));
}

VectorField parse_vector_field(const std::string& text, unsigned n) {
    std::vector<std::pair<std::size_t, std::string>> pieces;
    std::size_t start = 0;
    while (true) {
        std::size_t semi = text.find(';', start);
        pieces.emplace_back(start, text.substr(start, semi == std::string::npos ? semi : semi - start));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    unsigned arity = static_cast<unsigned>(pieces.size());
    if (n != 0 && n != arity)
        throw ParseError(0, "field has " + std::to_string(arity) + " components, expected " +
                                std::to_string(n));
    std::vector<Polynomial> comps;
    for (const auto& [off, piece] : pieces) {
        try {
            comps.push_back(parse_polynomial(piece, arity));
        } catch (const ParseError& e) {
            throw ParseError(e.position + off, "in component: " + std::string(e.what()));
        }
    }
    return VectorField(arity, std::move(comps));
}

namespace {

std::string rat_mag(const Rat& r) { return rat_str(Rat(abs(r))); }

// Sign-split rendering of one term: hoist tells the joiner to subtract.
std::pair<bool, std::string> term_str(const Word& w, const Scalar& c) {
    std::string ws = print_word(w);
    bool real = sgn(c.im) == 0;
    bool imag = !real && sgn(c.re) == 0;
    if (real || imag) {
        const Rat& r = real ? c.re : c.im;
        std::string mag = rat_mag(r) + (imag ? "i" : "");
        std::string body;
        if (w.empty())
            body = mag;
        else if (real && mag == "1")
            body = ws;
        else
            body = mag + "*" + ws;
        return {sgn(r) < 0, body};
    }
    std::string body = "(" + rat_str(c.re) + (sgn(c.im) < 0 ? "-" : "+") + rat_mag(c.im) + "i)";
    if (!w.empty()) body += "*" + ws;
    return {false, body};
}

} // namespace

std::string print_word(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) s += ".";
        s += "x" + std::to_string(w.letters[t]);
    }
    return s;
}

std::string print_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        auto [neg, body] = term_str(w, c);
        if (first)
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string print_vector_field(const VectorField& v) {
    std::string out;
    for (unsigned j = 0; j < v.n; ++j) {
        if (j) out += "; ";
        out += print_polynomial(v.components[j]);
    }
    return out;
}

std::string print_tensor(const TensorPoly& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [uv, c] : t.terms()) {
        bool neg = sgn(c.im) == 0 && sgn(c.re) < 0;
        std::string piece = print_polynomial(Polynomial::monomial(uv.first, neg ? -c : c)) +
                            " (x) " + print_word(uv.second);
        if (first)
            out += (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

std::string scalar_str(const Scalar& c) {
    if (c.is_zero()) return "0";
    if (sgn(c.im) == 0) return rat_str(c.re);
    if (sgn(c.re) == 0) return rat_str(c.im) + "i";
    return "(" + rat_str(c.re) + (sgn(c.im) < 0 ? "-" : "+") + rat_mag(c.im) + "i)";
}

} // namespace cyclograd
