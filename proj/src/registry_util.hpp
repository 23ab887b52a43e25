#pragma once

#include "qsv/identity.hpp"

namespace qsv::reg {

inline Monomial M(const Rational& c, long e = 0) { return Monomial(c, e); }
inline Rational R(long p, long q = 1) { return make_rational(p, q); }

inline long tri(long n) { return n * (n + 1) / 2; }

inline ParamSpec free_param(const std::string& name) { return ParamSpec{name}; }
inline ParamSpec box_param(const std::string& name, Rational lo, Rational hi) {
    ParamSpec p{name};
    p.lo = std::move(lo);
    p.hi = std::move(hi);
    return p;
}
inline ParamSpec n_param() {
    ParamSpec p{"N"};
    p.kind = ParamSpec::Kind::PositiveN;
    return p;
}
inline ParamSpec index_param(const std::string& name) {
    ParamSpec p{name};
    p.kind = ParamSpec::Kind::IndexUpToN;
    return p;
}

// x != q^j for lo <= j <= hi; vacuous without a point.
inline bool off_q_powers(const Binding& b, const Rational& x, long lo, long hi) {
    if (!b.q) return true;
    for (long j = lo; j <= hi; ++j)
        if (x == pow(*b.q, j)) return false;
    return true;
}

inline PhiSpec phi(std::vector<Monomial> up, std::vector<Monomial> lo, Monomial z, long r = 1) {
    PhiSpec s;
    s.upper = std::move(up);
    s.lower = std::move(lo);
    s.argument = std::move(z);
    s.base_exp = r;
    return s;
}

struct Builder {
    std::vector<Identity>& out;
    Identity& add(std::string id, std::string anchor, Mode mode, std::vector<ParamSpec> params, std::vector<Form> forms) {
        Identity x;
        x.id = std::move(id);
        x.anchor = std::move(anchor);
        x.mode = mode;
        x.params = std::move(params);
        x.forms = std::move(forms);
        out.push_back(std::move(x));
        return out.back();
    }
};

void add_entries(Builder& b, const Mutations& m);
void add_generalizations(Builder& b, const Mutations& m);
void add_basic(Builder& b, const Mutations& m);
void add_finite(Builder& b, const Mutations& m);
void add_chains(Builder& b, const Mutations& m);
void add_targets(Builder& b);

}  // namespace qsv::reg
