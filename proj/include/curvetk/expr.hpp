#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curvetk/jet.hpp"

namespace curvetk {

// Expression AST for curve components: real literals, the parameter t,
// + - * / with the usual precedence, integer powers via ^, parentheses,
// and the functions sin, cos, sqrt, exp. Value-semantic tree.
struct ExprNode {
    enum class Kind {
        Constant,   // value
        Parameter,  // t
        Negate,     // args[0]
        Add,        // args[0] + args[1]
        Subtract,
        Multiply,
        Divide,
        Power,      // args[0] ^ exponent (integer)
        Sin,
        Cos,
        Sqrt,
        Exp,
    };

    Kind kind = Kind::Constant;
    double value = 0.0;
    long long exponent = 0;
    std::vector<ExprNode> args;

    bool operator==(const ExprNode&) const = default;
};

// Throws syntax_error (with byte offset), unknown_identifier, or
// non_integer_exponent.
ExprNode parse_expression(std::string_view source);

// Emits source text that parses back to a structurally identical tree.
std::string to_source(const ExprNode& node);

// Plain evaluation at a point.
double evaluate(const ExprNode& node, double t);

// Jet evaluation; exact derivatives up to the seed's order. Throws
// domain_error / guard_violation from the jet layer where undefined.
Jet evaluate_jet(const ExprNode& node, const Jet& t);

} // namespace curvetk
