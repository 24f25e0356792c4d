#include "iva/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>

#include "iva/io.hpp"

namespace iva {

namespace {

ExprPtr make(Expr::Kind kind, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr make_number(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Number;
    e->value = v;
    return e;
}

struct Token {
    enum class Type { Number, Ident, Op, End };
    Type type = Type::End;
    double number = 0.0;
    std::string text;  // identifier name or operator character
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
            ++i_;
        cur_ = Token{};
        cur_.pos = i_;
        if (i_ >= src_.size()) {
            cur_.type = Token::Type::End;
            return;
        }
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src_.c_str() + i_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin)
                throw ParseError("malformed number", i_, "digit");
            cur_.type = Token::Type::Number;
            cur_.number = v;
            cur_.text.assign(begin, static_cast<std::size_t>(end - begin));
            i_ += static_cast<std::size_t>(end - begin);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[j])))
                ++j;
            cur_.type = Token::Type::Ident;
            cur_.text = src_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            cur_.type = Token::Type::Op;
            cur_.text = std::string(1, c);
            ++i_;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_,
                         "number, identifier or operator");
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token cur_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        if (lex_.peek().type != Token::Type::End)
            throw ParseError("trailing input after expression", lex_.peek().pos,
                             "end of input");
        return e;
    }

private:
    bool at_op(const char* s) const {
        return lex_.peek().type == Token::Type::Op && lex_.peek().text == s;
    }

    void expect_op(const char* s, const char* expected) {
        if (!at_op(s))
            throw ParseError(std::string("expected '") + s + "'", lex_.peek().pos,
                             expected);
        lex_.take();
    }

    ExprPtr sum() {
        ExprPtr e = term();
        while (at_op("+") || at_op("-")) {
            const bool plus = at_op("+");
            lex_.take();
            e = make(plus ? Expr::Kind::Add : Expr::Kind::Sub, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (at_op("*") || at_op("/")) {
            const bool mul = at_op("*");
            lex_.take();
            e = make(mul ? Expr::Kind::Mul : Expr::Kind::Div, e, factor());
        }
        return e;
    }

    ExprPtr factor() {
        if (at_op("-")) {
            lex_.take();
            return make(Expr::Kind::Neg, factor());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (!at_op("^"))
            return base;
        lex_.take();
        long sign = 1;
        if (at_op("-")) {
            lex_.take();
            sign = -1;
        }
        const Token t = lex_.peek();
        if (t.type != Token::Type::Number ||
            t.text.find_first_of(".eE") != std::string::npos)
            throw ParseError("exponent must be an integer literal", t.pos,
                             "integer");
        lex_.take();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Pow;
        e->exponent = sign * static_cast<long>(t.number);
        e->a = std::move(base);
        return e;
    }

    ExprPtr primary() {
        const Token t = lex_.peek();
        switch (t.type) {
        case Token::Type::Number:
            lex_.take();
            return make_number(t.number);
        case Token::Type::Ident: {
            lex_.take();
            if (t.text == "x")
                return make(Expr::Kind::Var);
            static const std::map<std::string, std::pair<Expr::Kind, int>> fns = {
                {"sin", {Expr::Kind::Sin, 1}}, {"cos", {Expr::Kind::Cos, 1}},
                {"exp", {Expr::Kind::Exp, 1}}, {"abs", {Expr::Kind::Abs, 1}},
                {"min", {Expr::Kind::Min, 2}}, {"max", {Expr::Kind::Max, 2}},
            };
            auto it = fns.find(t.text);
            if (it == fns.end())
                throw ParseError("unknown identifier '" + t.text + "'", t.pos,
                                 "x, sin, cos, exp, abs, min or max");
            expect_op("(", "'(' after function name");
            ExprPtr first = sum();
            ExprPtr second;
            if (it->second.second == 2) {
                expect_op(",", "',' between arguments");
                second = sum();
            }
            if (!at_op(")"))
                throw ParseError("unclosed parenthesis", lex_.peek().pos, "')'");
            lex_.take();
            return make(it->second.first, std::move(first), std::move(second));
        }
        case Token::Type::Op:
            if (t.text == "(") {
                lex_.take();
                ExprPtr inner = sum();
                if (!at_op(")"))
                    throw ParseError("unclosed parenthesis", lex_.peek().pos,
                                     "')'");
                lex_.take();
                return inner;
            }
            break;
        case Token::Type::End:
            break;
        }
        throw ParseError("expected a primary expression", t.pos,
                         "number, 'x', function call or '('");
    }

    Lexer lex_;
};

// Precedence levels used by the printer; mirrors the grammar.
int level(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
    }
}

void print(const Expr& e, std::string& out);

void print_child(const ExprPtr& child, int min_level, std::string& out) {
    if (level(*child) < min_level) {
        out += '(';
        print(*child, out);
        out += ')';
    } else {
        print(*child, out);
    }
}

void print(const Expr& e, std::string& out) {
    switch (e.kind) {
    case Expr::Kind::Number:
        out += fmt_double(e.value);
        return;
    case Expr::Kind::Var:
        out += 'x';
        return;
    case Expr::Kind::Neg:
        out += '-';
        print_child(e.a, 3, out);
        return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        print_child(e.a, 1, out);
        out += e.kind == Expr::Kind::Add ? '+' : '-';
        // right operand needs parens at equal level: a-(b-c) != a-b-c
        print_child(e.b, 2, out);
        return;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        print_child(e.a, 2, out);
        out += e.kind == Expr::Kind::Mul ? '*' : '/';
        print_child(e.b, 3, out);
        return;
    case Expr::Kind::Pow:
        print_child(e.a, 5, out);
        out += '^';
        out += std::to_string(e.exponent);
        return;
    case Expr::Kind::Sin: out += "sin"; break;
    case Expr::Kind::Cos: out += "cos"; break;
    case Expr::Kind::Exp: out += "exp"; break;
    case Expr::Kind::Abs: out += "abs"; break;
    case Expr::Kind::Min: out += "min"; break;
    case Expr::Kind::Max: out += "max"; break;
    }
    out += '(';
    print(*e.a, out);
    if (e.b) {
        out += ',';
        print(*e.b, out);
    }
    out += ')';
}

} // namespace

ExprPtr parse_expr(const std::string& text) {
    return Parser(text).parse();
}

std::string to_string(const ExprPtr& e) {
    std::string out;
    print(*e, out);
    return out;
}

double eval_expr(const Expr& e, double x) {
    switch (e.kind) {
    case Expr::Kind::Number: return e.value;
    case Expr::Kind::Var: return x;
    case Expr::Kind::Neg: return -eval_expr(*e.a, x);
    case Expr::Kind::Add: return eval_expr(*e.a, x) + eval_expr(*e.b, x);
    case Expr::Kind::Sub: return eval_expr(*e.a, x) - eval_expr(*e.b, x);
    case Expr::Kind::Mul: return eval_expr(*e.a, x) * eval_expr(*e.b, x);
    case Expr::Kind::Div: return eval_expr(*e.a, x) / eval_expr(*e.b, x);
    case Expr::Kind::Pow:
        return std::pow(eval_expr(*e.a, x), static_cast<double>(e.exponent));
    case Expr::Kind::Sin: return std::sin(eval_expr(*e.a, x));
    case Expr::Kind::Cos: return std::cos(eval_expr(*e.a, x));
    case Expr::Kind::Exp: return std::exp(eval_expr(*e.a, x));
    case Expr::Kind::Abs: return std::fabs(eval_expr(*e.a, x));
    case Expr::Kind::Min:
        return std::fmin(eval_expr(*e.a, x), eval_expr(*e.b, x));
    case Expr::Kind::Max:
        return std::fmax(eval_expr(*e.a, x), eval_expr(*e.b, x));
    }
    return 0.0; // unreachable
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b)
        return !a && !b;
    if (a->kind != b->kind)
        return false;
    if (a->kind == Expr::Kind::Number)
        return a->value == b->value;
    if (a->kind == Expr::Kind::Pow)
        return a->exponent == b->exponent && equal(a->a, b->a);
    return equal(a->a, b->a) && equal(a->b, b->b);
}

} // namespace iva
