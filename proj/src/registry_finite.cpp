// Generalizations of the five entries in the reversed-Pochhammer variable e, and finite forms.
#include "registry_util.hpp"

namespace qsv::reg {

namespace {

// e is not q^j for any j >= 1
bool off_all_q_powers(const Binding& b, const Rational& e) {
    if (!b.q || e == 0) return true;
    const Rational q = *b.q;
    const Rational target = abs(e);
    Rational qj = q;
    for (long j = 1; abs(qj) >= target; ++j, qj *= q)
        if (qj == e) return false;
    return true;
}

// sum_{k=1}^{n} q^k/(e - q^k)
template <class C>
auto partial_poles(const C& c, const Rational& e, long n) {
    return c.sum(1, n, [&](long k) { return c.qp(k) / c.lin(e, M(1, k), 1); });
}

}  // namespace

void add_finite(Builder& B, const Mutations& mut) {
    const auto lb_zero = [](long) { return 0L; };
    const auto lb_tri = [](long n) { return tri(n); };
    const auto lb_lin = [](long n) { return n; };
    const auto e_guard = [](const Binding& p) { return off_all_q_powers(p, p("e")); };
    const auto e_guard_n = [](const Binding& p) { return off_q_powers(p, p("e"), 1, p.N); };

    ParamSpec a_bounded = free_param("a");
    a_bounded.analytic_bound = R(1);

    B.add("GEN-E1", "§5, \"One variable generalization of Entry 1\"", Mode::Analytic, {a_bounded, free_param("b"), free_param("e")},
          {make_form("product",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), e = p("e");
                         return c.pinf(M(-a, 1)) * c.pinf(M(b * e)) / (c.pinf(M(-a * e)) * c.pinf(M(b, 1)));
                     }),
           make_form("sum", [lb_zero](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), e = p("e");
               return c.sum_inf(0, lb_zero, [&](long n) {
                   return c.lin(a, M(-b), n) * rpoch(c, e, n) * c.k(sign(n)) / (c.poch(M(1, 1), n) * c.poch(M(b, 1), n));
               });
           })})
        .guard = e_guard;

    B.add("GEN-E2", "§5, \"One variable generalization of Entry 2\"", Mode::Analytic, {a_bounded, free_param("e")},
          {make_form("weighted",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a"), e = p("e");
                         return c.pinf(M(a, 1)) / c.pinf(M(a * e)) * c.sum_inf(1, lb_zero, [&](long n) {
                                    return rpoch(c, e, n) * c.mono(M(sign(n) * n * pow(a, n), n * (n - 1) / 2)) /
                                           (c.poch(M(a, 1), n) * c.poch(M(1, 1), n));
                                });
                     }),
           make_form("lambert-type", [lb_zero](const auto& c, const Binding& p) {
               const Rational a = p("a"), e = p("e");
               return -c.sum_inf(1, lb_zero,
                                 [&](long n) { return rpoch(c, e, n) * c.k(pow(a, n)) / c.binom(M(1, n)); });
           })})
        .guard = e_guard;

    B.add("GEN-E3", "§5, \"One variable generalization of Entry 3\"", Mode::Analytic, {free_param("a"), free_param("b"), free_param("e")},
          {make_form("sum",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), e = p("e");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.lin(a, M(b), n) * c.mono(M(sign(n), tri(n))) /
                                    (c.binom(M(1, n)) * c.poch(M(b), n) * rpoch(c, e, n));
                         });
                     }),
           make_form("lambert-type", [lb_zero](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), e = p("e");
               const Rational head = b / (1 - b);
               auto main = c.sum_inf(1, lb_zero, [&](long n) {
                   return c.lin(b * e, M(a, 1), n) / (c.binom(M(1, n)) * rpoch(c, e, n));
               });
               return main - (c.k(head) + c.lambert(b));
           })})
        .guard = e_guard;

    B.add("GEN-E4", "§5, \"One variable generalization of Entry 4\"", Mode::FormalSeries, {free_param("z"), free_param("e")},
          {make_form("sum",
                     [lb_tri](const auto& c, const Binding& p) {
                         const Rational z = p("z"), e = p("e");
                         return c.sum_inf(1, lb_tri, [&](long n) {
                             return c.mono(M(pow(z, n), n * (n + 1))) /
                                    (c.binom(M(1, n)) * c.poch(M(z, 1), n) * rpoch(c, e, n));
                         });
                     }),
           make_form("lambert-type", [lb_lin](const auto& c, const Binding& p) {
               const Rational z = p("z"), e = p("e");
               return c.sum_inf(1, lb_lin, [&](long n) {
                   return c.mono(M(pow(z, n), n)) / c.binom(M(1, n)) * (c.k(pow(e, n)) / rpoch(c, e, n) - c.k(1));
               });
           })})
        .guard = e_guard;

    B.add("GEN-E5", "§5, \"One variable generalization of Entry 5\"", Mode::Analytic, {free_param("a"), free_param("e")},
          {make_form("sum",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a"), e = p("e");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.poch(M(1, 1), n - 1) * c.mono(M(sign(n) * pow(a, n), tri(n))) /
                                    (c.binom(M(1, n)) * c.poch(M(a), n) * rpoch(c, e, n));
                         });
                     }),
           make_form("pole-sum", [lb_zero](const auto& c, const Binding& p) {
               const Rational a = p("a"), e = p("e");
               return -c.sum_inf(1, lb_zero, [&](long n) {
                   return c.k(pow(a, n)) / c.binom(M(1, n)) * partial_poles(c, e, n);
               });
           })})
        .guard = e_guard;

    const bool fe1_mut = mut.has("FIN-E1.sign");
    B.add("FIN-E1", "§5, \"Finite analogue of Entry 1\"", Mode::ExactPoint, {free_param("a"), free_param("b"), free_param("e"), n_param()},
          {make_form("product",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), e = p("e");
                         const long N = p.N;
                         return c.poch(M(-a, 1), N) * c.poch(M(b * e), N) / c.poch(M(b, 1), N);
                     }),
           make_form("sum", [fe1_mut](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), e = p("e");
               const long N = p.N;
               return c.sum(0, N, [&](long n) {
                   return c.qbin(N, n) * c.k(sign(fe1_mut ? n - 1 : n)) * c.poch(M(-a * e), N - n) * c.lin(a, M(-b), n) *
                          rpoch(c, e, n) / c.poch(M(b, 1), n);
               });
           })})
        .guard = e_guard_n;

    B.add("FIN-E2", "§5, \"Finite analogue of Entry 2\"", Mode::ExactPoint, {free_param("a"), free_param("e"), n_param()},
          {make_form("weighted",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), e = p("e");
                         const long N = p.N;
                         return c.poch(M(a, 1), N) * c.sum(1, N, [&](long n) {
                                    return c.qbin(N, n) * rpoch(c, e, n) *
                                           c.mono(M(sign(n - 1) * n * pow(a, n), n * (n - 1) / 2)) / c.poch(M(a, 1), n);
                                });
                     }),
           make_form("lambert-type", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), e = p("e");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(a * e), N - n) * c.poch(M(1, 1), n) * rpoch(c, e, n) *
                          c.k(pow(a, n)) / c.binom(M(1, n));
               });
           })})
        .guard = e_guard_n;

    B.add("FIN-E3", "§5, \"Finite analogue of Entry 3\"", Mode::ExactPoint, {free_param("a"), free_param("b"), free_param("e"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), e = p("e");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.lin(a, M(b), n) *
                                    c.mono(M(sign(n), tri(n))) / (c.poch(M(b), n) * rpoch(c, e, n));
                         });
                     }),
           make_form("lambert-type", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), e = p("e");
               const long N = p.N;
               auto main = c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.poch(M(b), N - n) * c.lin(b * e, M(a, 1), n) /
                          (c.poch(M(b), N) * rpoch(c, e, n));
               });
               auto geo = c.sum(1, N, [&](long n) { return c.mono(M(b, n - 1)) / c.binom(M(b, n - 1)); });
               return main - geo;
           })})
        .guard = e_guard_n;

    const bool fe4_literal = mut.has("FIN-E4.literal");
    std::vector<ParamSpec> fe4_params{free_param("z"), free_param("e"), n_param()};
    if (fe4_literal) fe4_params.push_back(free_param("a"));
    B.add("FIN-E4", "§5, \"Finite analogue of Entry 4\"", Mode::ExactPoint, fe4_params,
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational z = p("z"), e = p("e");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.mono(M(pow(z, n), n * (n + 1))) /
                                    (c.poch(M(z, 1), n) * rpoch(c, e, n));
                         });
                     }),
           make_form("lambert-type", [fe4_literal](const auto& c, const Binding& p) {
               const Rational z = p("z"), e = p("e");
               const Rational x = fe4_literal ? p("a") : z;
               const long N = p.N;
               auto main = c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.poch(M(z, 1), N - n) *
                          c.mono(M(pow(x * e, n), n)) / (c.poch(M(z, 1), N) * rpoch(c, e, n));
               });
               auto geo = c.sum(1, N, [&](long n) { return c.mono(M(z, n)) / c.binom(M(z, n)); });
               return main - geo;
           })})
        .guard = e_guard_n;
    B.out.back().corrections = {"(aq)^n read as (zq)^n; no symbol a is in scope, and at N = 1 the corrected form gives "
                                "zq^2/((1-zq)(e-q)) on both sides"};

    B.add("FIN-E5", "§5, \"Finite analogue of Entry 5\"", Mode::ExactPoint, {free_param("a"), free_param("e"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), e = p("e");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             auto qn = c.poch(M(1, 1), n - 1);
                             return c.qbin(N, n) * qn * qn * c.mono(M(sign(n) * pow(a, n), tri(n))) /
                                    (c.poch(M(a), n) * rpoch(c, e, n));
                         });
                     }),
           make_form("pole-sum", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), e = p("e");
               const long N = p.N;
               return -c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.poch(M(a), N - n) * c.k(pow(a, n)) /
                          c.poch(M(a), N) * partial_poles(c, e, n);
               });
           })})
        .guard = e_guard_n;
}

void add_targets(Builder& B) {
    const auto lb_tri = [](long n) { return tri(n); };
    const auto lb_lin = [](long n) { return n; };
    B.add("BEM-COR", "§2, \"Letting $e=1$ in the above identity\"", Mode::FormalSeries, {free_param("c"), free_param("d"), free_param("z")},
          {make_form("alternating",
                     [lb_tri](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), d = p("d"), z = p("z");
                         return c.sum_inf(1, lb_tri, [&](long n) {
                             return c.lin(d, M(cc), n) * c.mono(M(pow(-z, n), tri(n))) /
                                    (c.poch(M(cc, 1), n) * c.poch(M(z, 1), n));
                         });
                     }),
           make_form("positive", [lb_lin](const auto& c, const Binding& p) {
               const Rational cc = p("c"), d = p("d"), z = p("z");
               const Rational pre = z * (cc - d) / cc;
               return c.sum_inf(1, lb_lin, [&](long n) {
                          return c.poch(M(z * d / cc, 1), n - 1) * c.mono(M(pow(cc, n), n)) / c.poch(M(z, 1), n);
                      }) *
                      pre;
           })});

    B.add("DP-FIN-E1", "§5, \"Letting $e \\rightarrow 0$\" (Entry 1)", Mode::ExactPoint, {free_param("a"), free_param("b"), n_param()},
          {make_form("product",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b");
                         return c.poch(M(-a, 1), p.N) / c.poch(M(b, 1), p.N);
                     }),
           make_form("sum", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b");
               const long N = p.N;
               return c.sum(0, N, [&](long n) {
                   return c.qbin(N, n) * c.lin(a, M(-b), n) * c.qp(tri(n)) / c.poch(M(b, 1), n);
               });
           })});

    B.add("DP-FIN-E2", "§5, \"Letting $e \\rightarrow 0$\" (Entry 2)", Mode::ExactPoint, {free_param("a"), n_param()},
          {make_form("weighted",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a");
                         const long N = p.N;
                         return c.poch(M(a, 1), N) * c.sum(1, N, [&](long n) {
                                    return c.qbin(N, n) * c.mono(M(pow(a, n) * n, n * n)) / c.poch(M(a, 1), n);
                                });
                     }),
           make_form("alternating", [](const auto& c, const Binding& p) {
               const Rational a = p("a");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(1, 1), n) * c.mono(M(sign(n - 1) * pow(a, n), tri(n))) /
                          c.binom(M(1, n));
               });
           })});

    B.add("DP-FIN-E3", "§5, \"Letting $e \\rightarrow 0$\" (Entry 3)", Mode::ExactPoint, {free_param("a"), free_param("b"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.lin(a, M(b), n) / c.poch(M(b), n);
                         });
                     }),
           make_form("lambert-type", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b");
               const long N = p.N;
               auto main = c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.poch(M(b), N - n) * c.k(pow(a, n)) /
                          c.poch(M(b), N);
               });
               auto geo = c.sum(1, N, [&](long n) { return c.mono(M(b, n - 1)) / c.binom(M(b, n - 1)); });
               return main - geo;
           })});

    B.add("DP-FIN-E4", "§5, \"Letting $e \\rightarrow 0$\" (Entry 4)", Mode::ExactPoint, {free_param("z"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational z = p("z");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.mono(M(sign(n - 1) * pow(z, n), tri(n))) /
                                    c.poch(M(z, 1), n);
                         });
                     }),
           make_form("geometric", [](const auto& c, const Binding& p) {
               const Rational z = p("z");
               return c.sum(1, p.N, [&](long n) { return c.mono(M(z, n)) / c.binom(M(z, n)); });
           })});

    B.add("DP-FIN-E5", "§5, \"Letting $e \\rightarrow 0$\" (Entry 5)", Mode::ExactPoint, {free_param("a"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             auto qn = c.poch(M(1, 1), n - 1);
                             return c.qbin(N, n) * qn * qn * c.k(pow(a, n)) / c.poch(M(a), n);
                         });
                     }),
           make_form("weighted", [](const auto& c, const Binding& p) {
               const Rational a = p("a");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(1, 1), n - 1) * c.poch(M(a), N - n) * c.k(pow(a, n) * n) /
                          c.poch(M(a), N);
               });
           })});
}

}  // namespace qsv::reg
