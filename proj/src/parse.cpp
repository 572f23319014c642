#include "tcx/parse.hpp"

#include <cctype>

namespace tcx {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

    Polynomial run() {
        skip_ws();
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    // expr   := ['+'|'-'] term (('+'|'-') term)*
    // term   := factor ('*' factor)*
    // factor := '-' factor | primary ['^' natural]
    // primary:= natural | identifier | '(' expr ')'
    Polynomial expr() {
        bool negate = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        Polynomial acc = term();
        if (negate) acc = neg(acc);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                Polynomial rhs = term();
                acc = (c == '+') ? add(acc, rhs) : sub(acc, rhs);
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                take();
                acc = mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        skip_ws();
        if (peek() == '-') {
            take();
            return neg(factor());
        }
        Polynomial base = primary();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent after '^'");
            std::uint64_t e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<std::uint64_t>(take() - '0');
                if (e >= kExponentCap) throw ParseError("exponent too large", at);
            }
            return pow_u(base, e);
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto& field = ctx_->field();
            Fp v = 0;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                v = field.reduce(static_cast<std::uint64_t>(v) * 10 + static_cast<std::uint64_t>(take() - '0'));
            return Polynomial::constant(ctx_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += take();
            auto idx = ctx_->var_index(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", at);
            return Polynomial::variable(ctx_, *idx);
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
        return Polynomial(ctx_);  // unreached
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const ContextPtr& ctx) {
    return Parser(text, ctx).run();
}

}  // namespace tcx
