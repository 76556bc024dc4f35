#include "abeltrace/parser.hpp"

#include "abeltrace/errors.hpp"

#include <cctype>

namespace abeltrace {

namespace {

struct Token {
    enum class Type { Int, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    const std::string& src_;
    size_t pos_ = 0;
    Token cur_{Token::Type::End, "", 0};

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        size_t start = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Token::Type::End, "", start};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Token::Type t) {
            ++pos_;
            cur_ = {t, std::string(1, c), start};
        };
        switch (c) {
            case '+': return single(Token::Type::Plus);
            case '-': return single(Token::Type::Minus);
            case '*': return single(Token::Type::Star);
            case '/': return single(Token::Type::Slash);
            case '^': return single(Token::Type::Caret);
            case '(': return single(Token::Type::LParen);
            case ')': return single(Token::Type::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            cur_ = {Token::Type::Int, src_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            cur_ = {Token::Type::Var, src_.substr(start, pos_ - start), start};
            return;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "' at position " +
                          std::to_string(start));
    }
};

class Parser {
public:
    Parser(const std::string& src, int n, bool poly_mode)
        : lex_(src), n_(n), poly_mode_(poly_mode) {}

    RatFunc parse() {
        RatFunc v = expr();
        expect(Token::Type::End, "end of input");
        return v;
    }

private:
    Lexer lex_;
    int n_;
    bool poly_mode_;

    [[noreturn]] void fail(const Token& t, const std::string& expected) {
        throw SyntaxError("at position " + std::to_string(t.pos) + ": expected " + expected +
                          ", found '" + (t.type == Token::Type::End ? "end of input" : t.text) + "'");
    }

    void expect(Token::Type type, const std::string& what) {
        if (lex_.peek().type != type) fail(lex_.peek(), what);
        lex_.take();
    }

    RatFunc expr() {
        RatFunc v = term();
        while (true) {
            auto t = lex_.peek().type;
            if (t == Token::Type::Plus) {
                lex_.take();
                v += term();
            } else if (t == Token::Type::Minus) {
                lex_.take();
                v -= term();
            } else {
                return v;
            }
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            auto t = lex_.peek().type;
            if (t == Token::Type::Star) {
                lex_.take();
                v *= factor();
            } else if (t == Token::Type::Slash) {
                Token slash = lex_.take();
                RatFunc d = factor();
                if (d.is_zero())
                    throw SyntaxError("division by zero at position " + std::to_string(slash.pos));
                if (poly_mode_ && !d.is_constant())
                    throw SyntaxError("at position " + std::to_string(slash.pos) +
                                      ": '/' in a polynomial needs a constant divisor");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFunc factor() {
        auto t = lex_.peek().type;
        if (t == Token::Type::Minus) {
            lex_.take();
            return -factor();
        }
        if (t == Token::Type::Plus) {
            lex_.take();
            return factor();
        }
        RatFunc v = atom();
        if (lex_.peek().type == Token::Type::Caret) {
            lex_.take();
            Token e = lex_.peek();
            if (e.type != Token::Type::Int) fail(e, "a nonnegative integer exponent");
            lex_.take();
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (...) {
                throw SyntaxError("exponent out of range at position " + std::to_string(e.pos));
            }
            v = pow_ratfunc(v, static_cast<unsigned>(exp));
        }
        return v;
    }

    RatFunc atom() {
        Token t = lex_.peek();
        switch (t.type) {
            case Token::Type::Int:
                lex_.take();
                return RatFunc::constant(n_, Rational::from_string(t.text));
            case Token::Type::Var: {
                lex_.take();
                int slot;
                try {
                    slot = slot_from_name(t.text, n_);
                } catch (const SyntaxError& e) {
                    throw SyntaxError("at position " + std::to_string(t.pos) + ": " + e.what());
                }
                return RatFunc::from_poly(MultiPoly::variable(n_, var_from_slot(slot, n_)));
            }
            case Token::Type::LParen: {
                lex_.take();
                RatFunc v = expr();
                expect(Token::Type::RParen, "')'");
                return v;
            }
            default:
                fail(t, "a number, variable or '('");
        }
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, int n) {
    RatFunc v = Parser(text, n, true).parse();
    // Constant rational divisors keep the value polynomial by construction.
    if (!v.is_polynomial())
        throw SyntaxError("expression is not a polynomial");
    MultiPoly p = v.num();
    if (!v.den().is_one()) p *= v.den().constant_value().inverse();
    return p;
}

RatFunc parse_ratfunc(const std::string& text, int n) {
    return Parser(text, n, false).parse();
}

} // namespace abeltrace
