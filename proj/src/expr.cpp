#include "curvetk/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace curvetk {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprNode parse() {
        ExprNode root = sum();
        skip_spaces();
        if (pos_ != src_.size())
            fail("unexpected trailing input");
        return root;
    }

private:
    // sum     := product (('+' | '-') product)*
    // product := unary (('*' | '/') unary)*
    // unary   := '-' unary | power
    // power   := atom ('^' integer)*
    // atom    := number | 't' | name '(' sum ')' | '(' sum ')'
    ExprNode sum() {
        ExprNode lhs = product();
        for (;;) {
            skip_spaces();
            if (consume('+'))
                lhs = binary(ExprNode::Kind::Add, std::move(lhs), product());
            else if (consume('-'))
                lhs = binary(ExprNode::Kind::Subtract, std::move(lhs), product());
            else
                return lhs;
        }
    }

    ExprNode product() {
        ExprNode lhs = unary();
        for (;;) {
            skip_spaces();
            if (consume('*'))
                lhs = binary(ExprNode::Kind::Multiply, std::move(lhs), unary());
            else if (consume('/'))
                lhs = binary(ExprNode::Kind::Divide, std::move(lhs), unary());
            else
                return lhs;
        }
    }

    ExprNode unary() {
        skip_spaces();
        if (consume('-')) {
            ExprNode node;
            node.kind = ExprNode::Kind::Negate;
            node.args.push_back(unary());
            return node;
        }
        return power();
    }

    ExprNode power() {
        ExprNode base = atom();
        for (;;) {
            skip_spaces();
            if (!consume('^')) return base;
            ExprNode node;
            node.kind = ExprNode::Kind::Power;
            node.exponent = integer_exponent();
            node.args.push_back(std::move(base));
            base = std::move(node);
        }
    }

    ExprNode atom() {
        skip_spaces();
        if (pos_ >= src_.size())
            fail("expected an operand");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return identifier();
        if (consume('(')) {
            ExprNode inner = sum();
            expect(')');
            return inner;
        }
        fail("unexpected character");
    }

    ExprNode number() {
        const std::size_t start = pos_;
        double value = read_double();
        if (pos_ == start)
            fail("malformed number");
        ExprNode node;
        node.kind = ExprNode::Kind::Constant;
        node.value = value;
        return node;
    }

    ExprNode identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "t") {
            ExprNode node;
            node.kind = ExprNode::Kind::Parameter;
            return node;
        }
        ExprNode::Kind kind;
        if (name == "sin") kind = ExprNode::Kind::Sin;
        else if (name == "cos") kind = ExprNode::Kind::Cos;
        else if (name == "sqrt") kind = ExprNode::Kind::Sqrt;
        else if (name == "exp") kind = ExprNode::Kind::Exp;
        else
            throw Error(errc::unknown_identifier,
                        "unknown identifier '" + std::string(name) + "' at offset " + std::to_string(start), start);
        skip_spaces();
        expect('(');
        ExprNode node;
        node.kind = kind;
        node.args.push_back(sum());
        expect(')');
        return node;
    }

    // Exponents must be integer literals (optionally signed). "t^2.5" and
    // "2^t" are rejected with the exponent's offset.
    long long integer_exponent() {
        skip_spaces();
        const std::size_t start = pos_;
        std::size_t p = pos_;
        if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
        std::size_t digits_start = p;
        while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
        if (p == digits_start)
            throw Error(errc::non_integer_exponent,
                        "exponent must be an integer literal at offset " + std::to_string(start), start);
        if (p < src_.size() && (src_[p] == '.' ||
                                ((src_[p] == 'e' || src_[p] == 'E') && p + 1 < src_.size())))
            throw Error(errc::non_integer_exponent,
                        "exponent must be an integer literal at offset " + std::to_string(start), start);
        const std::string literal(src_.substr(start, p - start));
        long long value = std::strtoll(literal.c_str(), nullptr, 10);
        pos_ = p;
        return value;
    }

    double read_double() {
        // strtod needs a terminated buffer; copy the longest plausible literal.
        std::string buf(src_.substr(pos_, std::min<std::size_t>(64, src_.size() - pos_)));
        char* end = nullptr;
        double value = std::strtod(buf.c_str(), &end);
        pos_ += static_cast<std::size_t>(end - buf.c_str());
        return value;
    }

    static ExprNode binary(ExprNode::Kind kind, ExprNode lhs, ExprNode rhs) {
        ExprNode node;
        node.kind = kind;
        node.args.push_back(std::move(lhs));
        node.args.push_back(std::move(rhs));
        return node;
    }

    void skip_spaces() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_spaces();
        if (!consume(c))
            fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error(errc::syntax_error, what + " at offset " + std::to_string(pos_), pos_);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ExprNode parse_expression(std::string_view source) { return Parser(source).parse(); }

std::string to_source(const ExprNode& node) {
    using Kind = ExprNode::Kind;
    switch (node.kind) {
        case Kind::Constant: return format_double(node.value);
        case Kind::Parameter: return "t";
        case Kind::Negate: return "(-" + to_source(node.args[0]) + ")";
        case Kind::Add: return "(" + to_source(node.args[0]) + " + " + to_source(node.args[1]) + ")";
        case Kind::Subtract: return "(" + to_source(node.args[0]) + " - " + to_source(node.args[1]) + ")";
        case Kind::Multiply: return "(" + to_source(node.args[0]) + " * " + to_source(node.args[1]) + ")";
        case Kind::Divide: return "(" + to_source(node.args[0]) + " / " + to_source(node.args[1]) + ")";
        case Kind::Power: return "(" + to_source(node.args[0]) + "^" + std::to_string(node.exponent) + ")";
        case Kind::Sin: return "sin(" + to_source(node.args[0]) + ")";
        case Kind::Cos: return "cos(" + to_source(node.args[0]) + ")";
        case Kind::Sqrt: return "sqrt(" + to_source(node.args[0]) + ")";
        case Kind::Exp: return "exp(" + to_source(node.args[0]) + ")";
    }
    raise(errc::domain_error, "unreachable expression kind");
}

double evaluate(const ExprNode& node, double t) {
    using Kind = ExprNode::Kind;
    switch (node.kind) {
        case Kind::Constant: return node.value;
        case Kind::Parameter: return t;
        case Kind::Negate: return -evaluate(node.args[0], t);
        case Kind::Add: return evaluate(node.args[0], t) + evaluate(node.args[1], t);
        case Kind::Subtract: return evaluate(node.args[0], t) - evaluate(node.args[1], t);
        case Kind::Multiply: return evaluate(node.args[0], t) * evaluate(node.args[1], t);
        case Kind::Divide: return evaluate(node.args[0], t) / evaluate(node.args[1], t);
        case Kind::Power: return std::pow(evaluate(node.args[0], t), static_cast<double>(node.exponent));
        case Kind::Sin: return std::sin(evaluate(node.args[0], t));
        case Kind::Cos: return std::cos(evaluate(node.args[0], t));
        case Kind::Sqrt: return std::sqrt(evaluate(node.args[0], t));
        case Kind::Exp: return std::exp(evaluate(node.args[0], t));
    }
    raise(errc::domain_error, "unreachable expression kind");
}

Jet evaluate_jet(const ExprNode& node, const Jet& t) {
    using Kind = ExprNode::Kind;
    switch (node.kind) {
        case Kind::Constant: return Jet::constant(node.value, t.order());
        case Kind::Parameter: return t;
        case Kind::Negate: return -evaluate_jet(node.args[0], t);
        case Kind::Add: return evaluate_jet(node.args[0], t) + evaluate_jet(node.args[1], t);
        case Kind::Subtract: return evaluate_jet(node.args[0], t) - evaluate_jet(node.args[1], t);
        case Kind::Multiply: return evaluate_jet(node.args[0], t) * evaluate_jet(node.args[1], t);
        case Kind::Divide: return evaluate_jet(node.args[0], t) / evaluate_jet(node.args[1], t);
        case Kind::Power: return pow(evaluate_jet(node.args[0], t), node.exponent);
        case Kind::Sin: return sin(evaluate_jet(node.args[0], t));
        case Kind::Cos: return cos(evaluate_jet(node.args[0], t));
        case Kind::Sqrt: return sqrt(evaluate_jet(node.args[0], t));
        case Kind::Exp: return exp(evaluate_jet(node.args[0], t));
    }
    raise(errc::domain_error, "unreachable expression kind");
}

} // namespace curvetk
