#include "igusa/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace igusa {

namespace {

struct Token {
    enum Kind { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Semi, End };
    Kind kind;
    std::string text;
    size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) return {Token::End, "", start};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_ + 1;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            Token t{Token::Name, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Plus, "+", start};
            case '-': return {Token::Minus, "-", start};
            case '*': return {Token::Star, "*", start};
            case '/': return {Token::Slash, "/", start};
            case '^': return {Token::Caret, "^", start};
            case '(': return {Token::LParen, "(", start};
            case ')': return {Token::RParen, ")", start};
            case ';': return {Token::Semi, ";", start};
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

  private:
    const std::string& s_;
    size_t i_ = 0;
};

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lex_(text), nvars_(static_cast<int>(vars.size())) {
        for (size_t i = 0; i < vars.size(); ++i) {
            if (!var_index_.emplace(vars[i], static_cast<int>(i)).second)
                throw ParseError("duplicate variable name '" + vars[i] + "'", 0);
        }
        advance();
    }

    std::vector<Polynomial> parse_components() {
        std::vector<Polynomial> out;
        out.push_back(parse_expr());
        while (cur_.kind == Token::Semi) {
            advance();
            out.push_back(parse_expr());
        }
        expect(Token::End, "end of input");
        return out;
    }

  private:
    void advance() { cur_ = lex_.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k)
            throw ParseError("expected " + what, cur_.pos);
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            advance();
            Polynomial rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_unary();
        while (cur_.kind == Token::Star || cur_.kind == Token::Slash) {
            bool div = cur_.kind == Token::Slash;
            size_t pos = cur_.pos;
            advance();
            Polynomial rhs = parse_unary();
            if (div) {
                if (!rhs.is_constant())
                    throw ParseError("division only by a nonzero constant", pos);
                Rational c = rhs.constant_term();
                if (c == 0) throw ParseError("division by zero", pos);
                acc = acc.scaled(Rational(1) / c);
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    Polynomial parse_unary() {
        if (cur_.kind == Token::Minus) {
            advance();
            return -parse_unary();
        }
        if (cur_.kind == Token::Plus) {
            advance();
            return parse_unary();
        }
        return parse_power();
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (cur_.kind == Token::Caret) {
            size_t pos = cur_.pos;
            advance();
            if (cur_.kind == Token::Minus)
                throw ParseError("negative exponent", cur_.pos);
            if (cur_.kind != Token::Number)
                throw ParseError("exponent must be a nonnegative integer literal", pos);
            unsigned long e = std::stoul(cur_.text);
            advance();
            Polynomial p = base.pow(e);
            // Right-associative chains like x^2^3 are not part of the grammar.
            if (cur_.kind == Token::Caret)
                throw ParseError("chained '^' is not allowed; parenthesize", cur_.pos);
            return p;
        }
        return base;
    }

    Polynomial parse_atom() {
        switch (cur_.kind) {
            case Token::Number: {
                Rational c(Integer(cur_.text));
                advance();
                return Polynomial::constant(nvars_, c);
            }
            case Token::Name: {
                auto it = var_index_.find(cur_.text);
                if (it == var_index_.end())
                    throw ParseError("unknown variable name '" + cur_.text + "'", cur_.pos);
                IVec e(nvars_, 0);
                e[it->second] = 1;
                advance();
                return Polynomial::monomial(nvars_, e, 1);
            }
            case Token::LParen: {
                advance();
                Polynomial inner = parse_expr();
                expect(Token::RParen, "')'");
                advance();
                return inner;
            }
            default:
                throw ParseError("expected a literal, variable, or '('", cur_.pos);
        }
    }

    Lexer lex_;
    Token cur_;
    int nvars_;
    std::map<std::string, int> var_index_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
    Parser p(text, variables);
    auto comps = p.parse_components();
    if (comps.size() != 1)
        throw ParseError("expected a single polynomial, got a ';' list", 0);
    return comps[0];
}

Mapping parse_mapping(const std::string& text, const std::vector<std::string>& variables) {
    Parser p(text, variables);
    return Mapping(p.parse_components());
}

std::vector<std::string> parse_variable_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&](size_t pos) {
        if (cur.empty()) throw ParseError("empty variable name", pos);
        if (!std::isalpha(static_cast<unsigned char>(cur[0])))
            throw ParseError("variable must start with a letter: '" + cur + "'", pos);
        for (char c : cur)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw ParseError("bad character in variable name: '" + cur + "'", pos);
        out.push_back(cur);
        cur.clear();
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ',') {
            flush(i);
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    flush(text.size());
    return out;
}

}  // namespace igusa
