#include "oracles.hpp"
#include "qsv/dsl.hpp"
#include "qsv/identity.hpp"
#include "qsv/qseries.hpp"

#include <doctest.h>

using namespace qsv;
using namespace qsv::dsl;

namespace {

const std::vector<std::string> kCorpus = {
    "q",
    "1",
    "3/4",
    "-q",
    "a",
    "a + b",
    "a - b - c",
    "a * b / c",
    "1 / 2 / 3",
    "(1 + q)^3",
    "q^-2",
    "2^-2 + (1/2)^2",
    "-(a + q)",
    "--q",
    "pochinf(q)",
    "pochinf(a*q^2)",
    "poch(q, 5)",
    "poch(a*q, n)",
    "poch(-1/2*q^3, 4) * poch(q, 2)",
    "pochrev(e, 3)",
    "pochrev(0, 2) + 1",
    "qbin(4, 2)",
    "qbin2(5, 3) - qbin(5, 3)",
    "lambert(1)",
    "lambert(1/2) + 3",
    "wlambert(-1/3) * q",
    "phi(a, b; c; q)",
    "phi(q^-3, a; c*q; q)",
    "phi(; ; q)",
    "phi(2; ; q)",
    "phi(a, b, c; d, e; q^2)",
    "bigsum(n, 1, 4, qbin(4, n) * q^n)",
    "bigsum(n, 0, 0, 1)",
    "bigsum(n, 1, 0, q)",
    "bigsum(k, 0, N, qbin(N, k) * q^k)",
    "bigsum(n, 0, 3, bigsum(m, 0, n, q^m))",
    "bigsum(n, 0, 3, q^-n)",
    "pochinf(q) * pochinf(-q) / pochinf(q^2)",
    "1 - q - q^2 + q^5",
    "(a + b) * (a - b)",
    "a / (b / c)",
    "(a / b) / c",
    "((q))",
    "  q  +\t1 ",
    "x_1 + x_2",
    "12345678901/7",
    "(1/2)*(2/3)*(3/4)",
    "3 / 4 * q",
    "(3) / 4",
    "-3 + -(2/5)",
};

}  // namespace

TEST_CASE("parse examples") {
    ExprPtr e = parse_expression("pochinf(q)");
    CHECK(e->kind == Expr::Kind::Call);
    CHECK(e->name == "pochinf");
    REQUIRE(e->args.size() == 1);
    CHECK(e->args[0]->kind == Expr::Kind::Q);

    ExprPtr s = parse_expression("bigsum(n,1,4, qbin(4,n)*q^n)");
    CHECK(s->kind == Expr::Kind::BigSum);
    CHECK(s->name == "n");
    REQUIRE(s->args.size() == 3);
    CHECK(s->args[2]->kind == Expr::Kind::Mul);
    CHECK(s->args[2]->args[0]->args[1]->name == "n");

    ExprPtr t = parse_expression("lambert(1/2) + 3");
    CHECK(t->kind == Expr::Kind::Add);
    CHECK(t->args[0]->kind == Expr::Kind::Call);
    CHECK(t->args[1]->kind == Expr::Kind::Literal);
    CHECK(t->args[1]->value == 3);
    CHECK(t->args[0]->args[0]->value == Rational(1, 2));
}

TEST_CASE("round trip over the corpus") {
    CHECK(kCorpus.size() == 50);
    for (const auto& s : kCorpus) {
        CAPTURE(s);
        ExprPtr a = parse_expression(s);
        std::string printed = pretty(*a);
        ExprPtr b = parse_expression(printed);
        CHECK(*a == *b);
        CHECK(pretty(*b) == printed);
    }
}

TEST_CASE("whitespace does not matter") {
    CHECK(*parse_expression("poch( a * q , 3 )+1") == *parse_expression("poch(a*q,3)+1"));
}

TEST_CASE("syntax errors carry offset and expected tokens") {
    try {
        parse_expression("1 + * q");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 4);
        CHECK(std::find(e.expected.begin(), e.expected.end(), "identifier") != e.expected.end());
    }
    CHECK_THROWS_AS(parse_expression("poch(q)"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("foo(q)"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("(q"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("q q"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("phi(a; b)"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("q^q"), SyntaxError);
    CHECK_THROWS_AS(parse_expression(""), SyntaxError);
    try {
        parse_expression("qbin(4,2) +");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 11);
    }
}

TEST_CASE("series evaluation") {
    LaurentSeries p = eval_series(*parse_expression("pochinf(q)"), 5, {});
    for (long m = 0; m <= 5; ++m) CHECK(p.coeff(m) == oracle::pentagonal(m));
    LaurentSeries b = eval_series(*parse_expression("qbin(4,2)"), 4, {});
    CHECK(b == qbinom(4, 2, 1, 4));
    LaurentSeries l = eval_series(*parse_expression("lambert(1)"), 6, {});
    for (long m = 1; m <= 6; ++m) CHECK(l.coeff(m) == oracle::divisor_count(m));
    CHECK(l.coeff(0) == 0);
    LaurentSeries s = eval_series(*parse_expression("bigsum(n,1,4, qbin(4,n)*q^n)"), 12, {});
    std::vector<long> want = {0, 1, 2, 3, 5, 2, 2, 0};
    for (long m = 0; m < 8; ++m) CHECK(s.coeff(m) == want[m]);
}

TEST_CASE("q-binomial theorem through the DSL") {
    Bindings b{{"a", Rational(2, 3)}};
    LaurentSeries lhs = eval_series(*parse_expression("phi(a; ; q)"), 20, b);
    LaurentSeries rhs = eval_series(*parse_expression("pochinf(a*q) / pochinf(q)"), 20, b);
    for (long m = 0; m <= 20; ++m) CHECK(lhs.coeff(m) == rhs.coeff(m));
}

TEST_CASE("point evaluation") {
    Bindings b{{"a", Rational(2, 5)}};
    PointValue v = eval_point(*parse_expression("poch(a*q,3) / poch(q,2)"), Rational(1, 3), b);
    Rational want = poch_point(Rational(2, 15), 3, Rational(1, 3)) / poch_point(Rational(1, 3), 2, Rational(1, 3));
    CHECK(v.value == want);
    CHECK(v.tail_bound == 0);

    PointValue w = eval_point(*parse_expression("pochinf(q)"), Rational(1, 5), {});
    Rational ref = poch_point(Rational(1, 5), 100, Rational(1, 5));
    CHECK(w.tail_bound > 0);
    CHECK(abs(w.value - ref) <= w.tail_bound);
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(eval_series(*parse_expression("x + q"), 3, {}), UnboundParameter);
    CHECK_THROWS_AS(eval_series(*parse_expression("poch(q + q^2, 2)"), 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(eval_series(*parse_expression("qbin(1/2, 1)"), 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(eval_series(*parse_expression("bigsum(n, 3, 1, q)"), 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(eval_point(*parse_expression("q"), Rational(3, 2), {}), std::invalid_argument);
    CHECK(eval_series(*parse_expression("bigsum(n, 1, 0, q)"), 3, {}).is_zero());
}
