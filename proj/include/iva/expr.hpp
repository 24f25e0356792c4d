#pragma once

#include <memory>
#include <string>

#include "iva/errors.hpp"

namespace iva {

// Expression AST over the endpoint-function grammar:
//   literals, the variable x, + - * /, ^ with an integer exponent,
//   sin, cos, exp, abs, min, max, parentheses, unary minus.
//
// All primitives are continuous except '/' and negative powers, which the
// function validator catches at construction (non-finite samples).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        Number, Var,
        Neg,
        Add, Sub, Mul, Div,
        Pow,                    // integer exponent in `exponent`
        Sin, Cos, Exp, Abs,     // unary calls
        Min, Max                // binary calls
    };

    Kind kind;
    double value = 0.0;   // Number
    long exponent = 0;    // Pow
    ExprPtr a;            // first operand
    ExprPtr b;            // second operand (binary ops and 2-arg calls)
};

// Parses the grammar above. Throws ParseError carrying the 0-based input
// position and the expected-token set.
ExprPtr parse_expr(const std::string& text);

// Minimal-parentheses form whose reparse yields a structurally identical
// tree. Literals use shortest round-trip formatting.
std::string to_string(const ExprPtr& e);

double eval_expr(const Expr& e, double x);

bool equal(const ExprPtr& a, const ExprPtr& b);

} // namespace iva
