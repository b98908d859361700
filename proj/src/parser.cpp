#include "invar/parser.hpp"

#include <cctype>

namespace invar {

namespace {

struct Tok {
    enum Kind { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Tok& peek() const { return tok_; }
    Tok take() {
        Tok t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::End, ""};
            return;
        }
        char c = s_[i_];
        if (isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Tok::Int, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() && (isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            tok_ = {Tok::Name, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, "+"}; return;
            case '-': tok_ = {Tok::Minus, "-"}; return;
            case '*': tok_ = {Tok::Star, "*"}; return;
            case '/': tok_ = {Tok::Slash, "/"}; return;
            case '^': tok_ = {Tok::Caret, "^"}; return;
            case '(': tok_ = {Tok::LParen, "("}; return;
            case ')': tok_ = {Tok::RParen, ")"}; return;
            default: fail(ErrorCode::ParseError, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    size_t i_ = 0;
    Tok tok_;
};

class PolyParser {
public:
    PolyParser(const std::string& text, const ParseContext& ctx) : lex_(text), ctx_(ctx), text_(text) {}

    SparsePolynomial parse() {
        SparsePolynomial p = expr();
        if (lex_.peek().kind != Tok::End) fail(ErrorCode::ParseError, "trailing input in '" + text_ + "'");
        return p;
    }

private:
    SparsePolynomial expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        } else if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        }
        SparsePolynomial acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            SparsePolynomial t = term();
            acc += minus ? -t : t;
        }
        return acc;
    }

    SparsePolynomial term() {
        SparsePolynomial acc = factor();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            bool div = lex_.take().kind == Tok::Slash;
            SparsePolynomial f = factor();
            if (div) {
                Scalar s = as_scalar(f, "divisor");
                acc = acc * s.inverse();
            } else {
                acc = acc * f;
            }
        }
        return acc;
    }

    SparsePolynomial factor() {
        SparsePolynomial base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            bool neg = false;
            if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                neg = true;
            }
            Tok t = lex_.take();
            if (t.kind != Tok::Int) fail(ErrorCode::ParseError, "integer exponent expected in '" + text_ + "'");
            long long e = std::stoll(t.text);
            if (neg) {
                Scalar s = as_scalar(base, "negative power base");
                return SparsePolynomial::constant(ctx_.nvars, s.pow(-e));
            }
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    SparsePolynomial atom() {
        Tok t = lex_.take();
        switch (t.kind) {
            case Tok::Int:
                return SparsePolynomial::constant(ctx_.nvars, Scalar::rational(Rat(BigInt(t.text))));
            case Tok::LParen: {
                SparsePolynomial p = expr();
                if (lex_.take().kind != Tok::RParen) fail(ErrorCode::ParseError, "missing ')' in '" + text_ + "'");
                return p;
            }
            case Tok::Minus:
                return -factor();
            case Tok::Name:
                return named(t.text);
            default:
                fail(ErrorCode::ParseError, "unexpected token '" + t.text + "' in '" + text_ + "'");
        }
    }

    SparsePolynomial named(const std::string& name) {
        if (auto it = ctx_.variables.find(name); it != ctx_.variables.end())
            return SparsePolynomial::variable(ctx_.nvars, it->second, Scalar::integer(1));
        if (auto it = ctx_.constants.find(name); it != ctx_.constants.end())
            return SparsePolynomial::constant(ctx_.nvars, it->second);
        if (auto it = ctx_.named.find(name); it != ctx_.named.end()) return it->second;
        if (name.size() > 1 && name[0] == 'z') {
            bool digits = true;
            for (size_t i = 1; i < name.size(); ++i)
                if (!isdigit(static_cast<unsigned char>(name[i]))) digits = false;
            if (digits) return SparsePolynomial::constant(ctx_.nvars, Scalar::zeta(std::stoi(name.substr(1))));
        }
        fail(ErrorCode::ParseError, "unknown name '" + name + "' in '" + text_ + "'");
    }

    Scalar as_scalar(const SparsePolynomial& p, const char* what) {
        if (p.is_zero()) return Scalar::integer(0);
        if (p.degree() != 0) fail(ErrorCode::ParseError, std::string(what) + " must be constant in '" + text_ + "'");
        return p.terms().begin()->second;
    }

    Lexer lex_;
    const ParseContext& ctx_;
    std::string text_;
};

} // namespace

SparsePolynomial parse_polynomial(const std::string& text, const ParseContext& ctx) {
    return PolyParser(text, ctx).parse();
}

Scalar parse_scalar(const std::string& text, const ParseContext& ctx) {
    ParseContext sctx = ctx;
    sctx.variables.clear();
    sctx.named.clear();
    SparsePolynomial p = PolyParser(text, sctx).parse();
    if (p.is_zero()) return Scalar::integer(0);
    if (p.degree() != 0) fail(ErrorCode::ParseError, "expected a scalar: " + text);
    return p.terms().begin()->second;
}

int parse_group_word(const std::string& text, const FiniteGroup& group) {
    if (text == "e" || text == "1") return group.identity();
    std::vector<std::pair<int, long long>> factors;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '*' || isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() && (isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_') &&
               text[j] != '^')
            ++j;
        std::string name = text.substr(i, j - i);
        int gen = -1;
        for (int k = 0; k < group.gen_count(); ++k)
            if (group.generator_names()[k] == name) gen = k;
        if (gen < 0) fail(ErrorCode::ParseError, "unknown generator '" + name + "' in word '" + text + "'");
        long long exp = 1;
        i = j;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && text[i] == '-') {
                neg = true;
                ++i;
            }
            size_t k = i;
            while (k < text.size() && isdigit(static_cast<unsigned char>(text[k]))) ++k;
            if (k == i) fail(ErrorCode::ParseError, "missing exponent in word '" + text + "'");
            exp = std::stoll(text.substr(i, k - i));
            if (neg) exp = -exp;
            i = k;
        }
        factors.emplace_back(gen, exp);
    }
    if (factors.empty()) fail(ErrorCode::ParseError, "empty group word");
    return group.evaluate_word(factors);
}

} // namespace invar
