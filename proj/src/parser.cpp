#include "blowup/parser.hpp"

#include <cctype>
#include <optional>

#include "blowup/errors.hpp"

namespace blowup {

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Integer: return "integer '" + t.text + "'";
        case Tok::Ident: return "identifier '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const std::size_t start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Integer, std::string(text.substr(i, j - i)), line, start_col});
            col += j - i;
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), line, start_col});
            col += j - i;
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({kind, std::string(1, c), line, start_col});
        ++col;
        ++i;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::span<const std::string> names, const Field& field)
        : tokens_(std::move(tokens)), names_(names), field_(field) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (peek().kind != Tok::End) fail("expected an operator or end of input");
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        const auto& t = peek();
        throw ParseError(what + ", found " + describe(t), t.line, t.column);
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = take().kind == Tok::Minus;
            Polynomial rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (true) {
            if (peek().kind == Tok::Star) {
                take();
                acc *= unary();
            } else if (peek().kind == Tok::Slash) {
                take();
                if (peek().kind != Tok::Integer) fail("division is only allowed by an integer literal");
                const auto& t = take();
                mpz_class d(t.text);
                if (d == 0) throw ParseError("division by zero", t.line, t.column);
                Scalar inv;
                try {
                    inv = Scalar(field_, mpz_class(1), d);
                } catch (const std::domain_error&) {
                    throw ParseError("divisor is zero in " + field_.describe(), t.line, t.column);
                }
                acc *= inv;
            } else if (peek().kind == Tok::Integer || peek().kind == Tok::Ident ||
                       peek().kind == Tok::LParen) {
                fail("implicit multiplication is not allowed; expected '*'");
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (peek().kind == Tok::Minus) {
            take();
            return -unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (peek().kind != Tok::Caret) return base;
        take();
        if (peek().kind != Tok::Integer) fail("exponent must be a nonnegative integer literal");
        const auto& t = take();
        mpz_class e(t.text);
        if (e > 4096) throw ParseError("exponent " + t.text + " is too large", t.line, t.column);
        if (peek().kind == Tok::Caret) fail("chained exponents need parentheses");
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    Polynomial primary() {
        const auto& t = peek();
        switch (t.kind) {
            case Tok::Integer: {
                take();
                return Polynomial::constant(field_, names_.size(), Scalar(field_, mpz_class(t.text)));
            }
            case Tok::Ident: {
                take();
                for (std::size_t i = 0; i < names_.size(); ++i)
                    if (names_[i] == t.text) return Polynomial::variable(field_, names_.size(), i);
                throw InputError("unknown variable '" + t.text + "' at line " +
                                 std::to_string(t.line) + ", column " + std::to_string(t.column));
            }
            case Tok::LParen: {
                take();
                Polynomial inner = expr();
                if (peek().kind != Tok::RParen) fail("expected ')'");
                take();
                return inner;
            }
            default: fail("expected a number, variable, or '('");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::span<const std::string> names_;
    Field field_;
};

}  // namespace

Polynomial parse_expression(std::string_view text, std::span<const std::string> variables,
                            const Field& field) {
    return Parser(lex(text), variables, field).parse();
}

}  // namespace blowup
