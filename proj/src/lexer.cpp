#include "spin7/detail/lexer.hpp"

#include <cctype>

namespace spin7::detail {

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits = [&](std::size_t j) {
        std::size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        return k;
    };
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        switch (ch) {
            case '+': out.push_back({Tok::Plus, i, "+"}); ++i; continue;
            case '-': out.push_back({Tok::Minus, i, "-"}); ++i; continue;
            case '*': out.push_back({Tok::Star, i, "*"}); ++i; continue;
            case '/': out.push_back({Tok::Slash, i, "/"}); ++i; continue;
            case '(': out.push_back({Tok::LParen, i, "("}); ++i; continue;
            case ')': out.push_back({Tok::RParen, i, ")"}); ++i; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t k = digits(i);
            out.push_back({Tok::Num, i, std::string(s.substr(i, k - i))});
            i = k;
            continue;
        }
        if (s.substr(i, 4) == "sqrt") {
            std::size_t k = digits(i + 4);
            std::string r(s.substr(i + 4, k - i - 4));
            if (r != "3" && r != "5" && r != "15")
                throw ParseError(i, "only sqrt3, sqrt5, sqrt15 are in the field");
            out.push_back({Tok::Sqrt, i, r});
            i = k;
            continue;
        }
        if (s.substr(i, 2) == "e_") {
            std::size_t k = digits(i + 2);
            if (k == i + 2) throw ParseError(i, "expected indices after e_");
            out.push_back({Tok::Blade, i, std::string(s.substr(i + 2, k - i - 2))});
            i = k;
            continue;
        }
        throw ParseError(i, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({Tok::End, s.size(), ""});
    return out;
}

Parser::Parser(std::string_view text, bool allow_blades)
    : toks_(tokenize(text)), blades_(allow_blades) {
    if (toks_.front().kind == Tok::End) throw ParseError(0, "empty expression");
}

void Parser::expect_end() const {
    if (peek().kind != Tok::End) throw ParseError(peek().offset, "unexpected '" + peek().text + "'");
}

Scalar Parser::parse_scalar_expr() {
    Scalar total;
    parse_sum([&](const Scalar& c, const std::string& blade) {
        if (!blade.empty()) throw ParseError(0, "basis blade inside scalar expression");
        total += c;
    });
    return total;
}

Scalar Parser::parse_product(std::string& blade) {
    Scalar v = parse_factor(blade);
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
        bool div = peek().kind == Tok::Slash;
        std::size_t at = peek().offset;
        ++pos_;
        std::string b2;
        Scalar f = parse_factor(b2);
        if (!b2.empty()) {
            if (div) throw ParseError(at, "cannot divide by a basis blade");
            if (!blade.empty()) throw ParseError(at, "at most one basis blade per term");
            blade = b2;
        }
        if (div) {
            if (f.is_zero()) throw ParseError(at, "division by zero");
            v /= f;
        } else {
            v *= f;
        }
    }
    return v;
}

Scalar Parser::parse_factor(std::string& blade) {
    const Token& t = peek();
    switch (t.kind) {
        case Tok::Num: {
            ++pos_;
            return Scalar(mpq_class(mpz_class(t.text)));
        }
        case Tok::Sqrt:
            ++pos_;
            return t.text == "3" ? Scalar::sqrt3() : t.text == "5" ? Scalar::sqrt5() : Scalar::sqrt15();
        case Tok::Blade:
            if (!blades_) throw ParseError(t.offset, "basis blade not allowed here");
            for (std::size_t i = 0; i < t.text.size(); ++i) {
                if (t.text[i] < '1' || t.text[i] > '8')
                    throw ParseError(t.offset, "index " + std::string(1, t.text[i]) + " out of range 1..8");
                if (t.text.find(t.text[i], i + 1) != std::string::npos)
                    throw ParseError(t.offset, "repeated index in e_" + t.text);
            }
            ++pos_;
            blade = t.text;
            return Scalar(1);
        case Tok::Minus: {
            ++pos_;
            return -parse_factor(blade);
        }
        case Tok::LParen: {
            ++pos_;
            Scalar v = parse_scalar_expr();
            if (peek().kind != Tok::RParen) throw ParseError(peek().offset, "expected ')'");
            ++pos_;
            return v;
        }
        default:
            throw ParseError(t.offset, t.kind == Tok::End ? "unexpected end of input"
                                                          : "unexpected '" + t.text + "'");
    }
}

}  // namespace spin7::detail
