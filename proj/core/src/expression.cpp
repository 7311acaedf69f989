#include "kmb/expression.hpp"

#include <cctype>
#include <functional>

#include "kmb/error.hpp"

namespace kmb {

namespace {

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(Errc::parse_error, pos_, what); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static ExprPtr node(Expr::Kind kind, std::size_t position, std::vector<ExprPtr> children = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->position = position;
        e->children = std::move(children);
        return e;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    long small_integer() {
        const std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
        const std::string d = digits();
        if (d.size() > 9) {
            pos_ = start;
            fail("integer too large");
        }
        long v = std::stol(d);
        return negative ? -v : v;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('+'))
                lhs = node(Expr::Kind::add, at, {lhs, term()});
            else if (accept('-'))
                lhs = node(Expr::Kind::sub, at, {lhs, term()});
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (true) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('*'))
                lhs = node(Expr::Kind::mul, at, {lhs, unary()});
            else if (accept('/'))
                lhs = node(Expr::Kind::div, at, {lhs, unary()});
            else
                return lhs;
        }
    }

    ExprPtr unary() {
        skip_space();
        const std::size_t at = pos_;
        if (accept('-')) return node(Expr::Kind::neg, at, {unary()});
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        skip_space();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        skip_space();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::pow;
        e->position = at;
        e->index = small_integer();
        e->children = {base};
        return e;
    }

    ExprPtr primary() {
        skip_space();
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::integer;
            e->position = at;
            e->value = Integer(digits());
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                if (text_[end] == '_') {
                    ++end;
                    break;
                }
                ++end;
            }
            const std::string_view name = text_.substr(pos_, end - pos_);
            if (name == "x_") {
                pos_ = end;
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::field_variable;
                e->position = at;
                e->index = small_integer();
                return e;
            }
            if (name == "t" || name == "a") {
                pos_ = end;
                return node(name == "t" ? Expr::Kind::loop_variable : Expr::Kind::generator, at);
            }
            throw ParseError(Errc::unknown_variable, at, "unknown symbol '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

/// Folds an expression tree into ring R; `symbol` resolves the leaves that
/// are not integer literals.
template <class R>
R fold(const Expr& e, const std::function<R(const Expr&)>& symbol) {
    auto divide = [&](const R& num, const R& den, std::size_t at) -> R {
        if (Scalar<R>::is_zero(den)) throw ParseError(Errc::division_by_zero, at, "division by zero");
        auto inv = Scalar<R>::unit_inverse(den);
        if (!inv) throw ParseError(Errc::not_invertible, at, "divisor " + Scalar<R>::to_string(den) + " is not a unit");
        return R(num * *inv);
    };
    switch (e.kind) {
        case Expr::Kind::integer: return R(Rational(e.value));
        case Expr::Kind::field_variable:
        case Expr::Kind::loop_variable:
        case Expr::Kind::generator: return symbol(e);
        case Expr::Kind::add: return R(fold<R>(*e.children[0], symbol) + fold<R>(*e.children[1], symbol));
        case Expr::Kind::sub: return R(fold<R>(*e.children[0], symbol) - fold<R>(*e.children[1], symbol));
        case Expr::Kind::mul: return R(fold<R>(*e.children[0], symbol) * fold<R>(*e.children[1], symbol));
        case Expr::Kind::div:
            return divide(fold<R>(*e.children[0], symbol), fold<R>(*e.children[1], symbol), e.position);
        case Expr::Kind::neg: return R(-fold<R>(*e.children[0], symbol));
        case Expr::Kind::pow: {
            const R base = fold<R>(*e.children[0], symbol);
            R result(1);
            for (long i = 0; i < std::abs(e.index); ++i) result = R(result * base);
            return e.index < 0 ? divide(R(1), result, e.position) : result;
        }
    }
    throw ParseError(Errc::parse_error, e.position, "malformed expression");
}

[[noreturn]] void unknown(const Expr& e, const std::string& ring) {
    std::string name = e.kind == Expr::Kind::field_variable ? "x_" + std::to_string(e.index)
                       : e.kind == Expr::Kind::loop_variable ? "t"
                                                             : "a";
    throw ParseError(Errc::unknown_variable, e.position, "symbol '" + name + "' is not available in ring " + ring);
}

RationalFunction field_variable(const Expr& e, const std::optional<VariableWindow>& window) {
    if (window && !window->contains(static_cast<int>(e.index)))
        throw ParseError(Errc::unknown_variable, e.position,
                         "variable x_" + std::to_string(e.index) + " outside window of radius " +
                             std::to_string(window->radius));
    return RationalFunction::variable(static_cast<int>(e.index));
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(RingTag tag) {
    switch (tag) {
        case RingTag::rational: return "Q";
        case RingTag::function_field: return "k";
        case RingTag::laurent: return "laurent";
        case RingTag::number_field: return "nf";
    }
    return "?";
}

std::optional<RingTag> ring_tag_from_string(std::string_view name) {
    if (name == "Q") return RingTag::rational;
    if (name == "k") return RingTag::function_field;
    if (name == "laurent") return RingTag::laurent;
    if (name == "nf") return RingTag::number_field;
    return std::nullopt;
}

Rational parse_rational(std::string_view text) {
    ExprPtr e = parse_expression(text);
    return fold<Rational>(*e, [](const Expr& s) -> Rational { unknown(s, "Q"); });
}

RationalFunction parse_rational_function(std::string_view text, std::optional<VariableWindow> window) {
    ExprPtr e = parse_expression(text);
    return fold<RationalFunction>(*e, [&](const Expr& s) -> RationalFunction {
        if (s.kind != Expr::Kind::field_variable) unknown(s, "k");
        return field_variable(s, window);
    });
}

LaurentPolynomial parse_laurent(std::string_view text, std::optional<VariableWindow> window) {
    ExprPtr e = parse_expression(text);
    return fold<LaurentPolynomial>(*e, [&](const Expr& s) -> LaurentPolynomial {
        if (s.kind == Expr::Kind::loop_variable) return LaurentPolynomial::t();
        if (s.kind != Expr::Kind::field_variable) unknown(s, "laurent");
        return LaurentPolynomial(field_variable(s, window));
    });
}

NFElement parse_nf(std::string_view text, const FieldPtr& field) {
    if (!field) throw MathError(Errc::invalid_argument, "number field expressions need a field");
    ExprPtr e = parse_expression(text);
    NFElement value = fold<NFElement>(*e, [&](const Expr& s) -> NFElement {
        if (s.kind != Expr::Kind::generator) unknown(s, "nf");
        return NFElement::generator(field);
    });
    return value.field() ? value : NFElement::rational(field, value.rational_value());
}

}  // namespace kmb
