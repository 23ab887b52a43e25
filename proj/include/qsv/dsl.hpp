#pragma once

#include "qsv/laurent_series.hpp"
#include "qsv/rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsv::dsl {

struct SyntaxError : std::runtime_error {
    std::size_t offset;
    std::vector<std::string> expected;
    SyntaxError(std::size_t off, std::vector<std::string> exp, const std::string& found);
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Literal, Q, Param, Neg, Add, Sub, Mul, Div, Pow, Call, Phi, BigSum };
    Kind kind = Kind::Literal;
    Rational value;               // Literal
    std::string name;             // Param, Call (builtin), BigSum (index)
    std::vector<ExprPtr> args;    // operands; Pow: base, exponent (integer or index); Phi: upper, lower, argument; BigSum: lo, hi, body
    std::size_t n_upper = 0;      // Phi
    std::size_t n_lower = 0;      // Phi

    bool operator==(const Expr& o) const;
};

// Builtin call names with their arities.
const std::map<std::string, int>& builtins();

ExprPtr parse_expression(const std::string& text);
std::string pretty(const Expr& e);

using Bindings = std::map<std::string, Rational>;

LaurentSeries eval_series(const Expr& e, long K, const Bindings& b);

struct PointValue {
    Rational value;
    Rational tail_bound{0};
    bool heuristic = false;
};
// Exact when the expression is finite; certified enclosure otherwise.
PointValue eval_point(const Expr& e, const Rational& q, const Bindings& b);

}  // namespace qsv::dsl
