#pragma once
// Tokenizer shared by the scalar and form parsers.

#include <string>
#include <string_view>
#include <vector>

#include "spin7/scalar.hpp"

namespace spin7::detail {

enum class Tok { Num, Sqrt, Blade, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;  // digits for Num/Blade, "3"/"5"/"15" for Sqrt
};

std::vector<Token> tokenize(std::string_view s);

// Recursive-descent over a token stream. Blades are only accepted when allow_blades.
class Parser {
public:
    Parser(std::string_view text, bool allow_blades);

    // sum of terms; callback receives (coefficient, blade digits or "")
    template <class F>
    void parse_sum(F&& emit) {
        bool first = true;
        while (true) {
            bool neg = false;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                neg = peek().kind == Tok::Minus;
                ++pos_;
            } else if (!first) {
                break;
            }
            std::string blade;
            Scalar c = parse_product(blade);
            emit(neg ? -c : c, blade);
            first = false;
        }
    }
    const Token& peek() const { return toks_[pos_]; }
    void expect_end() const;
    Scalar parse_scalar_expr();

private:
    Scalar parse_product(std::string& blade);
    Scalar parse_factor(std::string& blade);

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool blades_;
};

}  // namespace spin7::detail
