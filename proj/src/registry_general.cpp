// One-variable generalizations and their finite analogues.
#include "registry_util.hpp"

namespace qsv::reg {

void add_generalizations(Builder& B, const Mutations& mut) {
    const auto lb_zero = [](long) { return 0L; };
    const auto lb_tri = [](long n) { return tri(n); };
    const auto lb_sq = [](long n) { return n * n; };
    const auto lb_lin = [](long n) { return n; };

    // ad q^n/(1 - ad q^n) - b q^n/(1 - b q^n)
    const auto diff = [](const auto& c, const Rational& x, const Rational& y, long n) {
        return c.mono(M(x, n)) / c.binom(M(x, n)) - c.mono(M(y, n)) / c.binom(M(y, n));
    };

    B.add("THM-2-1", "§2, \"Let $a,b,c,d,e$ be complex numbers\"", Mode::Analytic,
          {free_param("a"), free_param("b"), free_param("c"), free_param("d"), free_param("e")},
          {make_form("sum",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d"), e = p("e");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.poch(M(b / a), n) * c.poch(M(cc / d), n) * rpoch(c, e, n - 1) * c.k(pow(a * d, n)) /
                                    (c.poch(M(b), n) * c.poch(M(cc, 1), n) * c.poch(M(1, 1), n - 1));
                         });
                     }),
           make_form("difference", [lb_zero, diff](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d"), e = p("e");
               const Rational ad = a * d, pre = (a - b) * (d - cc) / (ad - b);
               auto prod = c.pinf(M(cc * e, 1)) * c.pinf(M(ad)) / (c.pinf(M(cc, 1)) * c.pinf(M(ad * e)));
               return prod * c.sum_inf(0, lb_zero, [&](long n) {
                          return c.poch(M(a), n) * c.poch(M(b * d / cc), n) * rpoch(c, e, n) * c.k(pow(cc, n)) /
                                 (c.poch(M(b), n) * c.poch(M(ad), n) * c.poch(M(1, 1), n)) * diff(c, ad, b, n);
                      }) *
                      pre;
           })})
        .guard = [](const Binding& p) { return p("a") * p("d") != p("b"); };

    B.add("COR-2-2", "§2, \"For $|ceq|<1$, we have\"", Mode::FormalSeries,
          {free_param("c"), free_param("d"), free_param("e"), free_param("z")},
          {make_form("alternating",
                     [lb_tri](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), d = p("d"), e = p("e"), z = p("z");
                         return c.sum_inf(1, lb_tri, [&](long n) {
                             return c.lin(d, M(cc), n) * rpoch(c, e, n - 1) * c.mono(M(pow(-z, n), tri(n))) /
                                    (c.poch(M(z, 1), n) * c.poch(M(cc, 1), n) * c.poch(M(1, 1), n - 1));
                         });
                     }),
           make_form("positive", [lb_lin](const auto& c, const Binding& p) {
               const Rational cc = p("c"), d = p("d"), e = p("e"), z = p("z");
               const Rational pre = (cc - d) * z / cc;
               return c.pinf(M(cc * e, 1)) / c.pinf(M(cc, 1)) * c.sum_inf(1, lb_lin, [&](long n) {
                          return c.poch(M(z * d / cc, 1), n - 1) * rpoch(c, e, n - 1) * c.mono(M(pow(cc, n), n)) /
                                 (c.poch(M(z, 1), n) * c.poch(M(1, 1), n - 1));
                      }) *
                      pre;
           })});

    B.add("COR-2-3", "§2, \"gives a generalization of\"", Mode::FormalSeries,
          {free_param("c"), free_param("e"), free_param("z")},
          {make_form("squares",
                     [lb_sq](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), e = p("e"), z = p("z");
                         return c.sum_inf(1, lb_sq, [&](long n) {
                             return rpoch(c, e, n - 1) * c.mono(M(pow(cc * z, n), n * n)) /
                                    (c.poch(M(z, 1), n) * c.poch(M(cc, 1), n) * c.poch(M(1, 1), n - 1));
                         });
                     }),
           make_form("geometric", [lb_lin](const auto& c, const Binding& p) {
               const Rational cc = p("c"), e = p("e"), z = p("z");
               return c.pinf(M(cc * e, 1)) / c.pinf(M(cc, 1)) * c.sum_inf(1, lb_lin, [&](long n) {
                          return rpoch(c, e, n - 1) * c.mono(M(pow(cc, n), n)) / (c.poch(M(z, 1), n) * c.poch(M(1, 1), n - 1));
                      }) *
                      z;
           })});

    B.add("COR-2-4", "§2, \"an interesting new generalization of\"", Mode::Analytic,
          {free_param("a"), free_param("b"), free_param("c"), free_param("e")},
          {make_form("sum",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c"), e = p("e");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.poch(M(b / a), n) * rpoch(c, e, n - 1) * c.k(pow(a, n)) /
                                    (c.binom(M(cc, n)) * c.poch(M(b), n) * c.poch(M(1, 1), n - 1));
                         });
                     }),
           make_form("difference", [lb_zero, diff](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), e = p("e");
               auto prod = c.pinf(M(cc * e, 1)) * c.pinf(M(a)) / (c.pinf(M(cc, 1)) * c.pinf(M(a * e)));
               return prod * c.sum_inf(0, lb_zero, [&](long n) {
                          return c.lin(cc, M(b), n) * rpoch(c, e, n) / (c.poch(M(b), n) * c.poch(M(1, 1), n)) *
                                 diff(c, a, b, n);
                      });
           })});

    B.add("GARVAN-GEN", "§2, \"For $|dz|<1$ and $|q|<1$\"", Mode::FormalSeries,
          {free_param("z"), free_param("d")},
          {make_form("base-two",
                     [lb_sq](const auto& c, const Binding& p) {
                         const Rational z = p("z"), d = p("d");
                         const Rational inv = Rational(1) / (z - d);
                         return c.sum_inf(1, lb_sq, [&](long n) {
                             return c.lin(d, M(z), n, 2) * c.mono(M(sign(n) * pow(z, n), n * n)) /
                                    c.poch(M(z, 1), 2 * n);
                         }) *
                                inv;
                     }),
           make_form("base-one", [lb_tri](const auto& c, const Binding& p) {
               const Rational z = p("z"), d = p("d");
               return c.sum_inf(1, lb_tri, [&](long n) {
                   return c.poch(M(d, 1), n - 1) * c.mono(M(pow(z, n), tri(n))) / c.poch(M(z, 1), n);
               });
           })})
        .guard = [](const Binding& p) { return p("z") != p("d"); };

    B.add("THM-2-5", "§2, \"For any natural number $N$, we have\"", Mode::ExactPoint,
          {free_param("a"), free_param("b"), free_param("c"), free_param("d"), free_param("e"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d"), e = p("e");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n) * c.poch(M(b / a), n) * c.poch(M(cc / d), n) *
                                    rpoch(c, e, n - 1) * c.poch(M(a * d * e), N - n) * c.k(pow(a * d, n)) /
                                    (c.poch(M(b), n) * c.poch(M(cc, 1), n) * c.poch(M(1, 1), n - 1));
                         });
                     }),
           make_form("difference", [diff](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d"), e = p("e");
               const Rational ad = a * d, pre = (a - b) * (d - cc) / (ad - b);
               const long N = p.N;
               return c.poch(M(ad), N) / c.poch(M(cc, 1), N) * c.sum(1, N, [&](long n) {
                          return c.qbin(N, n) * c.poch(M(1, 1), n) * c.poch(M(cc * e, 1), N - n) * c.poch(M(a), n - 1) *
                                 c.poch(M(b * d / cc), n - 1) * rpoch(c, e, n - 1) * c.k(pow(cc, n - 1)) /
                                 (c.poch(M(b), n - 1) * c.poch(M(ad), n - 1) * c.poch(M(1, 1), n - 1)) *
                                 diff(c, ad, b, n - 1);
                      }) *
                      pre;
           })})
        .guard = [](const Binding& p) { return p("a") * p("d") != p("b"); };

    B.add("COR-2-6", "§2, \"we get a finite analogue of\"", Mode::ExactPoint,
          {free_param("c"), free_param("d"), free_param("e"), free_param("z"), n_param()},
          {make_form("alternating",
                     [](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), d = p("d"), e = p("e"), z = p("z");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n) * c.lin(d, M(cc), n) * rpoch(c, e, n - 1) *
                                    c.mono(M(pow(-z, n), tri(n))) /
                                    (c.poch(M(z, 1), n) * c.poch(M(cc, 1), n) * c.poch(M(1, 1), n - 1));
                         });
                     }),
           make_form("positive", [](const auto& c, const Binding& p) {
               const Rational cc = p("c"), d = p("d"), e = p("e"), z = p("z");
               const Rational pre = z * (cc - d) / cc;
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                          return c.qbin(N, n) * c.poch(M(1, 1), n) * c.poch(M(cc * e, 1), N - n) *
                                 c.poch(M(z * d / cc, 1), n - 1) * rpoch(c, e, n - 1) * c.mono(M(pow(cc, n), n)) /
                                 (c.poch(M(z, 1), n) * c.poch(M(1, 1), n - 1));
                      }) /
                      c.poch(M(cc, 1), N) * pre;
           })});

    B.add("COR-2-7", "§2, \"arrive at the following finite analogue\"", Mode::ExactPoint,
          {free_param("c"), free_param("e"), free_param("z"), n_param()},
          {make_form("squares",
                     [](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), e = p("e"), z = p("z");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n) * rpoch(c, e, n - 1) *
                                    c.mono(M(pow(z * cc, n), n * n)) /
                                    (c.poch(M(z, 1), n) * c.poch(M(cc, 1), n) * c.poch(M(1, 1), n - 1));
                         });
                     }),
           make_form("geometric", [](const auto& c, const Binding& p) {
               const Rational cc = p("c"), e = p("e"), z = p("z");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                          return c.qbin(N, n) * c.poch(M(1, 1), n) * c.poch(M(cc * e, 1), N - n) * rpoch(c, e, n - 1) *
                                 c.mono(M(pow(cc, n), n)) / (c.poch(M(z, 1), n) * c.poch(M(1, 1), n - 1));
                      }) /
                      c.poch(M(cc, 1), N) * z;
           })});

    B.add("COR-2-8", "§2, \"substituting $d=1$\"", Mode::ExactPoint,
          {free_param("a"), free_param("b"), free_param("c"), free_param("e"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c"), e = p("e");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n) * c.poch(M(b / a), n) * rpoch(c, e, n - 1) *
                                    c.poch(M(a * e), N - n) * c.k(pow(a, n)) /
                                    (c.binom(M(cc, n)) * c.poch(M(b), n) * c.poch(M(1, 1), n - 1));
                         });
                     }),
           make_form("difference", [diff](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), e = p("e");
               const long N = p.N;
               return c.poch(M(a), N) / c.poch(M(cc, 1), N) * c.sum(1, N, [&](long n) {
                          return c.qbin(N, n) * c.poch(M(1, 1), n) * c.poch(M(cc * e, 1), N - n) *
                                 c.poch(M(b / cc), n - 1) * rpoch(c, e, n - 1) * c.k(pow(cc, n - 1)) /
                                 (c.poch(M(b), n - 1) * c.poch(M(1, 1), n - 1)) * diff(c, a, b, n - 1);
                      });
           })});

    const bool thm29_mut = mut.has("THM-2-9.exponent");
    B.add("THM-2-9", "§2, \"generalizes a finite analogue of Garvan's identity\"", Mode::ExactPoint,
          {free_param("z"), free_param("d"), n_param()},
          {make_form("base-two",
                     [thm29_mut](const auto& c, const Binding& p) {
                         const Rational z = p("z"), d = p("d");
                         const Rational inv = Rational(1) / (z - d);
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n, 2) * c.poch(M(1, 2), n, 2) * c.lin(d, M(z), n, 2) *
                                    c.mono(M(sign(n) * pow(z, n), n * n + (thm29_mut ? 1 : 0))) /
                                    c.poch(M(z, 1), 2 * n);
                         }) *
                                inv;
                     }),
           make_form("split", [](const auto& c, const Binding& p) {
               const Rational z = p("z"), d = p("d");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                   auto odd = c.poch(M(d, 1), 2 * n - 2) * c.mono(M(pow(z, 2 * n - 1), n * (2 * n - 1))) /
                              c.poch(M(z, 1), 2 * n - 1);
                   auto even = c.poch(M(d, 1), 2 * n - 1) * c.mono(M(pow(z, 2 * n), n * (2 * n + 1))) /
                               c.poch(M(z, 1), 2 * n);
                   return c.qbin(N, n, 2) * (odd + even) * c.poch(M(1, 2), n, 2) / c.poch(M(d * z, 2 * N + 1), n, 2);
               });
           })})
        .guard = [](const Binding& p) { return p("z") != p("d"); };
}

}  // namespace qsv::reg
