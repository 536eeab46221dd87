#include "freevl/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "freevl/errors.hpp"
#include "freevl/rational.hpp"

namespace freevl {

namespace {

enum class Tok {
    Num,
    Ident,
    Join,
    Meet,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

const char* token_name(Tok kind) {
    switch (kind) {
        case Tok::Num: return "number";
        case Tok::Ident: return "identifier";
        case Tok::Join: return "'\\/'";
        case Tok::Meet: return "'/\\'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::End: return "end of input";
    }
    return "token";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Num, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        switch (c) {
            case '/':
                if (i + 1 < n && text[i + 1] == '\\') {
                    out.push_back({Tok::Meet, "/\\", start});
                    i += 2;
                } else {
                    out.push_back({Tok::Slash, "/", start});
                    ++i;
                }
                continue;
            case '\\':
                if (i + 1 < n && text[i + 1] == '/') {
                    out.push_back({Tok::Join, "\\/", start});
                    i += 2;
                    continue;
                }
                throw SyntaxError("stray '\\'", start, "'\\/'");
            case '+': out.push_back({Tok::Plus, "+", start}); break;
            case '-': out.push_back({Tok::Minus, "-", start}); break;
            case '*': out.push_back({Tok::Star, "*", start}); break;
            case '(': out.push_back({Tok::LParen, "(", start}); break;
            case ')': out.push_back({Tok::RParen, ")", start}); break;
            case '[': out.push_back({Tok::LBracket, "[", start}); break;
            case ']': out.push_back({Tok::RBracket, "]", start}); break;
            case ',': out.push_back({Tok::Comma, ",", start}); break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", start,
                                  "an operator, bracket, number, or identifier");
        }
        ++i;
    }
    out.push_back({Tok::End, "", n});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, std::optional<std::size_t> dim,
           const std::map<std::string, std::size_t>* label_axes)
        : tokens_(lex(text)), dim_(dim), label_axes_(label_axes) {}

    Expr parse_full_expr() {
        Expr result = parse_join();
        expect(Tok::End);
        return result;
    }

    Vector parse_full_vector() {
        Vector result = parse_vector_literal();
        expect(Tok::End);
        return result;
    }

    std::vector<Vector> parse_full_vector_list() {
        expect(Tok::LBracket);
        std::vector<Vector> result;
        result.push_back(parse_vector_literal());
        while (peek().kind == Tok::Comma) {
            advance();
            result.push_back(parse_vector_literal());
        }
        expect(Tok::RBracket);
        expect(Tok::End);
        return result;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t idx = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[idx];
    }

    Token advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    Token expect(Tok kind) {
        if (peek().kind != kind) {
            const Token& t = peek();
            throw SyntaxError(std::string("unexpected ") + token_name(t.kind), t.pos,
                              token_name(kind));
        }
        return advance();
    }

    Expr parse_join() {
        Expr lhs = parse_meet();
        while (peek().kind == Tok::Join) {
            advance();
            lhs = Expr::join(lhs, parse_meet());
        }
        return lhs;
    }

    Expr parse_meet() {
        Expr lhs = parse_sum();
        while (peek().kind == Tok::Meet) {
            advance();
            lhs = Expr::meet(lhs, parse_sum());
        }
        return lhs;
    }

    Expr parse_sum() {
        Expr lhs = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool subtract = advance().kind == Tok::Minus;
            Expr rhs = parse_term();
            lhs = Expr::add(lhs, subtract ? Expr::negate(rhs) : rhs);
        }
        return lhs;
    }

    // A leading rational is a scale factor only when followed by '*'; a bare
    // '-' before an atom is negation instead.
    Expr parse_term() {
        const bool starts_rational =
            peek().kind == Tok::Num ||
            (peek().kind == Tok::Minus && peek(1).kind == Tok::Num);
        if (starts_rational) {
            const Rational factor = parse_rational();
            expect(Tok::Star);
            return Expr::scale(factor, parse_atom());
        }
        return parse_atom();
    }

    Expr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::LBracket:
                return Expr::gen(parse_vector_literal());
            case Tok::LParen: {
                advance();
                Expr inner = parse_join();
                expect(Tok::RParen);
                return inner;
            }
            case Tok::Minus:
                advance();
                return Expr::negate(parse_atom());
            case Tok::Ident: {
                if (label_axes_ == nullptr) {
                    throw SyntaxError("unexpected identifier", t.pos,
                                      "a vector literal, '(', or '-'");
                }
                const Token name = advance();
                const auto it = label_axes_->find(name.text);
                if (it == label_axes_->end()) {
                    throw UnknownLabelError("unknown label '" + name.text + "'");
                }
                return Expr::gen(Vector::unit(*dim_, it->second));
            }
            default:
                throw SyntaxError(std::string("unexpected ") + token_name(t.kind), t.pos,
                                  label_axes_ == nullptr
                                      ? "a vector literal, '(', or '-'"
                                      : "a vector literal, identifier, '(', or '-'");
        }
    }

    Rational parse_rational() {
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            advance();
            negative = true;
        }
        const Token num = expect(Tok::Num);
        Integer numerator(num.text);
        if (negative) numerator = -numerator;
        if (peek().kind != Tok::Slash) {
            return Rational(numerator);
        }
        advance();
        const Token den = expect(Tok::Num);
        const Integer denominator(den.text);
        if (denominator == 0) {
            throw SyntaxError("zero denominator", den.pos, "a nonzero integer");
        }
        return make_rational(numerator, denominator);
    }

    Vector parse_vector_literal() {
        const Token open = expect(Tok::LBracket);
        std::vector<Rational> coords;
        coords.push_back(parse_rational());
        while (peek().kind == Tok::Comma) {
            advance();
            coords.push_back(parse_rational());
        }
        expect(Tok::RBracket);
        if (dim_ && coords.size() != *dim_) {
            throw DimensionMismatchError(
                "vector literal at position " + std::to_string(open.pos) + " has " +
                std::to_string(coords.size()) + " coordinates, expected " +
                std::to_string(*dim_));
        }
        return Vector(std::move(coords));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::optional<std::size_t> dim_;
    const std::map<std::string, std::size_t>* label_axes_;
};

}  // namespace

Expr parse_expr(std::string_view text, std::size_t dim) {
    return Parser(text, dim, nullptr).parse_full_expr();
}

Expr parse_set_expr(std::string_view text, const std::vector<std::string>& labels) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<std::string, std::size_t> axes;
    for (std::size_t i = 0; i < sorted.size(); ++i) axes[sorted[i]] = i;
    return Parser(text, sorted.size(), &axes).parse_full_expr();
}

Vector parse_vector(std::string_view text) {
    return Parser(text, std::nullopt, nullptr).parse_full_vector();
}

Vector parse_vector(std::string_view text, std::size_t dim) {
    return Parser(text, dim, nullptr).parse_full_vector();
}

std::vector<Vector> parse_vector_list(std::string_view text) {
    return Parser(text, std::nullopt, nullptr).parse_full_vector_list();
}

}  // namespace freevl
