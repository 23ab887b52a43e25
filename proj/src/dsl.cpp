#include "qsv/dsl.hpp"

#include "qsv/context.hpp"
#include "qsv/identity.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace qsv::dsl {

namespace {

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s;
}

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    Expr e;
    e.kind = k;
    e.args = {std::move(a), std::move(b)};
    return node(std::move(e));
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) fail({"operator", "end of input"});
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail({std::string("'") + c + "'"});
    }
    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip();
        std::string found = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
        throw SyntaxError(pos_, std::move(expected), found);
    }
    bool at_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool at_ident() {
        skip();
        return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
    }
    std::string digits() {
        if (!at_digit()) fail({"integer"});
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(b, pos_ - b);
    }
    std::string ident() {
        if (!at_ident()) fail({"identifier"});
        std::size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(b, pos_ - b);
    }
    long integer() {
        bool neg = accept('-');
        std::size_t at = pos_;
        std::string d = digits();
        if (d.size() > 15) throw SyntaxError(at, {"integer of at most 15 digits"}, d);
        long v = std::stol(d);
        return neg ? -v : v;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept('+')) e = binary(Expr::Kind::Add, e, term());
            else if (accept('-')) e = binary(Expr::Kind::Sub, e, term());
            else return e;
        }
    }
    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (accept('*')) e = binary(Expr::Kind::Mul, e, factor());
            else if (accept('/')) e = binary(Expr::Kind::Div, e, factor());
            else return e;
        }
    }
    ExprPtr factor() {
        ExprPtr base = atom();
        if (!accept('^')) return base;
        std::size_t save = pos_;
        bool neg = accept('-');
        if (!at_ident()) {
            pos_ = save;
            Expr x;
            x.value = integer();
            return binary(Expr::Kind::Pow, base, node(std::move(x)));
        }
        std::size_t at = pos_;
        Expr x;
        x.kind = Expr::Kind::Param;
        x.name = ident();
        if (x.name == "q") throw SyntaxError(at, {"integer", "index name"}, "'q'");
        ExprPtr ex = node(std::move(x));
        if (neg) {
            Expr n;
            n.kind = Expr::Kind::Neg;
            n.args = {ex};
            ex = node(std::move(n));
        }
        return binary(Expr::Kind::Pow, base, ex);
    }
    ExprPtr atom() {
        if (at_digit()) {
            Rational v{mpz_class{digits()}};
            // p/q written without an operator in between is one literal
            std::size_t save = pos_;
            if (accept('/') && at_digit()) {
                std::size_t at = pos_;
                mpz_class den{digits()};
                if (den == 0) throw SyntaxError(at, {"nonzero denominator"}, "0");
                v /= Rational(den);
            } else {
                pos_ = save;
            }
            Expr e;
            e.value = v;
            return node(std::move(e));
        }
        if (accept('(')) {
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (accept('-')) {
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.args = {atom()};
            return node(std::move(e));
        }
        if (at_ident()) {
            std::size_t at = pos_;
            std::string id = ident();
            if (!peek('(')) {
                Expr e;
                if (id == "q") e.kind = Expr::Kind::Q;
                else {
                    e.kind = Expr::Kind::Param;
                    e.name = id;
                }
                return node(std::move(e));
            }
            return call(id, at);
        }
        fail({"rational", "q", "identifier", "'('", "'-'"});
    }

    ExprPtr call(const std::string& id, std::size_t at) {
        expect('(');
        if (id == "phi") return phi();
        if (id == "bigsum") return bigsum();
        auto it = builtins().find(id);
        if (it == builtins().end() || id == "phi" || id == "bigsum") {
            std::vector<std::string> names;
            for (const auto& [k, v] : builtins()) names.push_back(k);
            throw SyntaxError(at, names, "'" + id + "'");
        }
        Expr e;
        e.kind = Expr::Kind::Call;
        e.name = id;
        e.args.push_back(expr());
        while (accept(',')) e.args.push_back(expr());
        if (static_cast<int>(e.args.size()) != it->second)
            throw SyntaxError(pos_, {std::to_string(it->second) + " argument(s) for " + id}, std::to_string(e.args.size()));
        expect(')');
        return node(std::move(e));
    }

    std::vector<ExprPtr> list_until(char stop) {
        std::vector<ExprPtr> xs;
        if (peek(stop)) return xs;
        xs.push_back(expr());
        while (accept(',')) xs.push_back(expr());
        return xs;
    }

    ExprPtr phi() {
        Expr e;
        e.kind = Expr::Kind::Phi;
        auto up = list_until(';');
        expect(';');
        auto lo = list_until(';');
        expect(';');
        ExprPtr z = expr();
        expect(')');
        e.n_upper = up.size();
        e.n_lower = lo.size();
        e.args = up;
        e.args.insert(e.args.end(), lo.begin(), lo.end());
        e.args.push_back(z);
        return node(std::move(e));
    }

    ExprPtr bigsum() {
        Expr e;
        e.kind = Expr::Kind::BigSum;
        std::size_t at = pos_;
        e.name = ident();
        if (e.name == "q") throw SyntaxError(at, {"index name other than q"}, "'q'");
        expect(',');
        e.args.push_back(expr());
        expect(',');
        e.args.push_back(expr());
        expect(',');
        e.args.push_back(expr());
        expect(')');
        return node(std::move(e));
    }
};

bool is_atomic(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal: return e.value.get_den() == 1;
        case Expr::Kind::Q:
        case Expr::Kind::Param:
        case Expr::Kind::Call:
        case Expr::Kind::Phi:
        case Expr::Kind::BigSum: return true;
        default: return false;
    }
}

std::string wrap(const Expr& e) { return is_atomic(e) ? pretty(e) : "(" + pretty(e) + ")"; }

}  // namespace

SyntaxError::SyntaxError(std::size_t off, std::vector<std::string> exp, const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(off) + ": expected " + join(exp) + ", found " + found),
      offset(off),
      expected(std::move(exp)) {}

bool Expr::operator==(const Expr& o) const {
    if (kind != o.kind || value != o.value || name != o.name || n_upper != o.n_upper ||
        n_lower != o.n_lower || args.size() != o.args.size())
        return false;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (!(*args[i] == *o.args[i])) return false;
    return true;
}

const std::map<std::string, int>& builtins() {
    static const std::map<std::string, int> b{{"poch", 2},  {"pochinf", 1}, {"pochrev", 2}, {"qbin", 2},
                                              {"qbin2", 2}, {"lambert", 1}, {"wlambert", 1}};
    return b;
}

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string pretty(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal: return to_string(e.value);
        case Expr::Kind::Q: return "q";
        case Expr::Kind::Param: return e.name;
        case Expr::Kind::Neg: return "-" + wrap(*e.args[0]);
        case Expr::Kind::Add: return "(" + pretty(*e.args[0]) + " + " + pretty(*e.args[1]) + ")";
        case Expr::Kind::Sub: return "(" + pretty(*e.args[0]) + " - " + pretty(*e.args[1]) + ")";
        case Expr::Kind::Mul: return "(" + pretty(*e.args[0]) + " * " + pretty(*e.args[1]) + ")";
        case Expr::Kind::Div: {
            // keep an integer numerator from fusing with the divisor into one literal
            std::string lhs = pretty(*e.args[0]);
            if (e.args[0]->kind == Expr::Kind::Literal) lhs = "(" + lhs + ")";
            return "(" + lhs + " / " + pretty(*e.args[1]) + ")";
        }
        case Expr::Kind::Pow: return wrap(*e.args[0]) + "^" + pretty(*e.args[1]);
        case Expr::Kind::Call: {
            std::string s = e.name + "(";
            for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + pretty(*e.args[i]);
            return s + ")";
        }
        case Expr::Kind::Phi: {
            std::string s = "phi(";
            for (std::size_t i = 0; i < e.n_upper; ++i) s += (i ? ", " : "") + pretty(*e.args[i]);
            s += "; ";
            for (std::size_t i = 0; i < e.n_lower; ++i) s += (i ? ", " : "") + pretty(*e.args[e.n_upper + i]);
            return s + "; " + pretty(*e.args.back()) + ")";
        }
        case Expr::Kind::BigSum:
            return "bigsum(" + e.name + ", " + pretty(*e.args[0]) + ", " + pretty(*e.args[1]) + ", " + pretty(*e.args[2]) + ")";
    }
    return "";
}

namespace {

struct Env {
    const Bindings& params;
    std::map<std::string, long> indices;
};

Rational scalar_of(const Expr& e, const Env& env);
long integer_of(const Expr& e, const Env& env);

Monomial monomial_of(const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::Literal: return {e.value, 0};
        case Expr::Kind::Q: return {1, 1};
        case Expr::Kind::Param: {
            if (auto it = env.indices.find(e.name); it != env.indices.end()) return {Rational(it->second), 0};
            auto it = env.params.find(e.name);
            if (it == env.params.end()) throw UnboundParameter("unbound parameter: " + e.name);
            return {it->second, 0};
        }
        case Expr::Kind::Neg: {
            Monomial m = monomial_of(*e.args[0], env);
            return {-m.coeff, m.exp};
        }
        case Expr::Kind::Mul: {
            Monomial a = monomial_of(*e.args[0], env), b = monomial_of(*e.args[1], env);
            return {a.coeff * b.coeff, a.exp + b.exp};
        }
        case Expr::Kind::Div: {
            Monomial a = monomial_of(*e.args[0], env), b = monomial_of(*e.args[1], env);
            if (b.coeff == 0) throw DivisionByZero("division by zero in a monomial");
            return {a.coeff / b.coeff, a.exp - b.exp};
        }
        case Expr::Kind::Pow: {
            Monomial a = monomial_of(*e.args[0], env);
            const long n = integer_of(*e.args[1], env);
            if (a.coeff == 0 && n < 0) throw DivisionByZero("negative power of zero");
            return {pow(a.coeff, n), a.exp * n};
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            Monomial a = monomial_of(*e.args[0], env), b = monomial_of(*e.args[1], env);
            if (e.kind == Expr::Kind::Sub) b.coeff = -b.coeff;
            if (a.coeff == 0) return {b.coeff, b.exp};
            if (b.coeff == 0 || a.exp == b.exp) return {a.coeff + b.coeff, a.exp};
            break;
        }
        default: break;
    }
    throw std::invalid_argument("expected a monomial r*q^k: " + pretty(e));
}

Rational scalar_of(const Expr& e, const Env& env) {
    Monomial m = monomial_of(e, env);
    if (m.exp != 0) throw std::invalid_argument("expected a q-free scalar: " + pretty(e));
    return m.coeff;
}

long integer_of(const Expr& e, const Env& env) {
    Rational r = scalar_of(e, env);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw std::invalid_argument("expected an integer: " + pretty(e));
    return r.get_num().get_si();
}

long natural_of(const Expr& e, const Env& env) {
    long n = integer_of(e, env);
    if (n < 0) throw std::invalid_argument("expected a nonnegative integer: " + pretty(e));
    return n;
}

template <class C>
typename C::Value eval(const C& c, const Expr& e, Env& env) {
    switch (e.kind) {
        case Expr::Kind::Literal:
        case Expr::Kind::Param: return c.k(scalar_of(e, env));
        case Expr::Kind::Q: return c.qp(1);
        case Expr::Kind::Neg: return -eval(c, *e.args[0], env);
        case Expr::Kind::Add: return eval(c, *e.args[0], env) + eval(c, *e.args[1], env);
        case Expr::Kind::Sub: return eval(c, *e.args[0], env) - eval(c, *e.args[1], env);
        case Expr::Kind::Mul: return eval(c, *e.args[0], env) * eval(c, *e.args[1], env);
        case Expr::Kind::Div: return eval(c, *e.args[0], env) / eval(c, *e.args[1], env);
        case Expr::Kind::Pow: return vpow(c, eval(c, *e.args[0], env), integer_of(*e.args[1], env));
        case Expr::Kind::Call: {
            const auto& a = e.args;
            if (e.name == "poch") return c.poch(monomial_of(*a[0], env), natural_of(*a[1], env));
            if (e.name == "pochinf") return c.pinf(monomial_of(*a[0], env));
            if (e.name == "pochrev") return rpoch(c, scalar_of(*a[0], env), natural_of(*a[1], env));
            if (e.name == "qbin") return c.qbin(natural_of(*a[0], env), natural_of(*a[1], env), 1);
            if (e.name == "qbin2") return c.qbin(natural_of(*a[0], env), natural_of(*a[1], env), 2);
            if (e.name == "lambert") return c.lambert(scalar_of(*a[0], env));
            if (e.name == "wlambert") return c.wlambert(scalar_of(*a[0], env));
            throw std::invalid_argument("unknown builtin " + e.name);
        }
        case Expr::Kind::Phi: {
            PhiSpec spec;
            for (std::size_t i = 0; i < e.n_upper; ++i) spec.upper.push_back(monomial_of(*e.args[i], env));
            for (std::size_t i = 0; i < e.n_lower; ++i) spec.lower.push_back(monomial_of(*e.args[e.n_upper + i], env));
            spec.argument = monomial_of(*e.args.back(), env);
            spec.check_shape();
            return c.phi(spec);
        }
        case Expr::Kind::BigSum: {
            const long lo = natural_of(*e.args[0], env), hi = natural_of(*e.args[1], env);
            if (lo > hi + 1) throw std::invalid_argument("bigsum bounds need lo <= hi + 1");
            auto saved = env.indices.find(e.name) != env.indices.end() ? std::optional<long>(env.indices[e.name]) : std::nullopt;
            auto v = c.sum(lo, hi, [&](long i) {
                env.indices[e.name] = i;
                return eval(c, *e.args[2], env);
            });
            if (saved) env.indices[e.name] = *saved;
            else env.indices.erase(e.name);
            return v;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

}  // namespace

LaurentSeries eval_series(const Expr& e, long K, const Bindings& b) {
    Env env{b, {}};
    FormalCtx c(K);
    return c.series(eval(c, e, env));
}

PointValue eval_point(const Expr& e, const Rational& q, const Bindings& b) {
    if (q == 0 || abs(q) >= 1) throw std::invalid_argument("point evaluation needs 0 < |q| < 1");
    try {
        Env env{b, {}};
        ExactCtx c(q);
        return PointValue{eval(c, e, env).v, 0, false};
    } catch (const ModeMismatch&) {
    }
    Env env{b, {}};
    BallCtx c(q);
    Ball v = eval(c, e, env);
    return PointValue{v.mid(), v.rad(), c.heuristic};
}

}  // namespace qsv::dsl
