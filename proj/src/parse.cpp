#include "nilfit/parse.hpp"

#include <cctype>

namespace nilfit {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
        const std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::end, "", start};
            return;
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                num += s_[i_++];
            // a '/' directly between digits extends the literal to a rational
            if (i_ < s_.size() && s_[i_] == '/' && i_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
                num += s_[i_++];
                while (i_ < s_.size() &&
                       std::isdigit(static_cast<unsigned char>(s_[i_])))
                    num += s_[i_++];
            }
            tok_ = {Tok::number, std::move(num), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                    s_[i_] == '_'))
                id += s_[i_++];
            tok_ = {Tok::ident, std::move(id), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::plus, "+", start}; return;
            case '-': tok_ = {Tok::minus, "-", start}; return;
            case '*': tok_ = {Tok::star, "*", start}; return;
            case '^': tok_ = {Tok::caret, "^", start}; return;
            case '(': tok_ = {Tok::lparen, "(", start}; return;
            case ')': tok_ = {Tok::rparen, ")", start}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 start);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Tok::end, "", 0};
};

class Parser {
public:
    Parser(const std::string& text, RingPtr ring)
        : lex_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expression();
        if (lex_.peek().kind != Tok::end)
            throw ParseError("trailing input", lex_.peek().pos);
        return p;
    }

private:
    // expression := ['+'|'-'] term (('+'|'-') term)*
    Polynomial expression() {
        bool neg = false;
        if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus)
            neg = lex_.take().kind == Tok::minus;
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            const bool sub = lex_.take().kind == Tok::minus;
            Polynomial t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    // term := factor ('*' factor)*
    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    // factor := primary ('^' number)*
    Polynomial factor() {
        Polynomial base = primary();
        while (lex_.peek().kind == Tok::caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::number || e.text.find('/') != std::string::npos)
                throw ParseError("expected a non-negative integer exponent", e.pos);
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", e.pos);
            }
            if (exp > 0xffff) throw ParseError("exponent out of range", e.pos);
            base = base.pow(static_cast<unsigned>(exp));
        }
        return base;
    }

    Polynomial primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::number:
                return Polynomial::constant(
                    ring_, FieldElement::from_string(ring_->field(), t.text));
            case Tok::ident: {
                int idx = ring_->var_index(t.text);
                if (idx < 0)
                    throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
            }
            case Tok::lparen: {
                Polynomial p = expression();
                Token close = lex_.take();
                if (close.kind != Tok::rparen)
                    throw ParseError("expected ')'", close.pos);
                return p;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    Lexer lex_;
    RingPtr ring_;
};

// Rational with a plain '-' sign; GF(p) residues never carry one.
bool is_negative(const FieldElement& c) {
    return c.field().is_rational() && sgn(c.rat()) < 0;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const auto& names = p.ring()->var_names();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        FieldElement c = t.coeff;
        if (is_negative(c)) {
            out += '-';
            c = -c;
        } else if (!first) {
            out += '+';
        }
        first = false;
        if (t.mono.is_one()) {
            out += c.str();
        } else {
            if (!c.is_one()) out += c.str() + "*";
            out += t.mono.str(names);
        }
    }
    return out;
}

}  // namespace nilfit
