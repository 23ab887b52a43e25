// Entries 1-5 and their classical companions.
#include "registry_util.hpp"

namespace qsv::reg {

void add_entries(Builder& B, const Mutations& mut) {
    const auto lb_tri = [](long n) { return tri(n); };
    const auto lb_sq = [](long n) { return n * n; };
    const auto lb_lin = [](long n) { return n; };
    const auto lb_zero = [](long) { return 0L; };

    B.add("E1", "§1, \"Entry 1:\"", Mode::FormalSeries, {free_param("a"), free_param("b")},
          {make_form("product",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b");
                         return c.pinf(M(-a, 1)) / c.pinf(M(b, 1));
                     }),
           make_form("sum", [lb_tri](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b");
               return c.sum_inf(0, lb_tri, [&](long n) {
                   return c.poch(M(-b / a), n) * c.mono(M(pow(a, n), tri(n))) /
                          (c.poch(M(1, 1), n) * c.poch(M(b, 1), n));
               });
           })});

    B.add("E2", "§1, \"Entry 2:\"", Mode::FormalSeries, {free_param("a")},
          {make_form("weighted",
                     [lb_sq](const auto& c, const Binding& p) {
                         const Rational a = p("a");
                         return c.pinf(M(a, 1)) * c.sum_inf(1, lb_sq, [&](long n) {
                                    return c.mono(M(pow(a, n) * n, n * n)) / (c.poch(M(1, 1), n) * c.poch(M(a, 1), n));
                                });
                     }),
           make_form("alternating", [lb_tri](const auto& c, const Binding& p) {
               const Rational a = p("a");
               return c.sum_inf(1, lb_tri, [&](long n) {
                   return c.mono(M(sign(n - 1) * pow(a, n), tri(n))) / c.binom(M(1, n));
               });
           })});

    B.add("E3", "§1, \"Entry 3:\"", Mode::Analytic, {free_param("a"), free_param("b")},
          {make_form("sum",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.poch(M(b / a), n) * c.k(pow(a, n)) / (c.binom(M(1, n)) * c.poch(M(b), n));
                         });
                     }),
           make_form("lambert", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b");
               const Rational head = a / (1 - a) - b / (1 - b);
               return c.k(head) + c.lambert(a) - c.lambert(b);
           })});

    const bool kluyver_mut = mut.has("KLUYVER.exponent");
    const auto e4_lhs = [lb_tri](const auto& c, const Rational& z, bool shifted) {
        return c.sum_inf(1, lb_tri, [&](long n) {
            long e = shifted ? n * (n + 3) / 2 : tri(n);
            return c.mono(M(sign(n - 1) * pow(z, n), e)) / (c.binom(M(1, n)) * c.poch(M(z, 1), n));
        });
    };

    B.add("E4", "§1, \"Entry 4:\"", Mode::FormalSeries, {free_param("z")},
          {make_form("sum", [e4_lhs](const auto& c, const Binding& p) { return e4_lhs(c, p("z"), false); }),
           make_form("lambert", [](const auto& c, const Binding& p) { return c.lambert(p("z")); })});

    B.add("KLUYVER", "§1, \"found a special case of\"", Mode::FormalSeries, {},
          {make_form("sum", [e4_lhs, kluyver_mut](const auto& c, const Binding&) { return e4_lhs(c, Rational(1), kluyver_mut); }),
           make_form("divisor", [](const auto& c, const Binding&) { return c.lambert(Rational(1)); })});

    B.add("UCHIMURA-TRIPLE", "§1, \"gave a new expression to\"", Mode::FormalSeries, {},
          {make_form("tail-products",
                     [lb_lin](const auto& c, const Binding&) {
                         return c.sum_inf(1, lb_lin, [&](long n) { return c.mono(M(n, n)) * c.pinf(M(1, n + 1)); });
                     }),
           make_form("alternating", [e4_lhs](const auto& c, const Binding&) { return e4_lhs(c, Rational(1), false); }),
           make_form("lambert-sum", [lb_lin](const auto& c, const Binding&) {
               return c.sum_inf(1, lb_lin, [&](long n) { return c.qp(n) / c.binom(M(1, n)); });
           })});

    B.add("E5", "§1, \"Entry 5:\"", Mode::Analytic, {free_param("a")},
          {make_form("sum",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.k(pow(a, n)) * c.poch(M(1, 1), n - 1) / (c.binom(M(1, n)) * c.poch(M(a), n));
                         });
                     }),
           make_form("weighted-lambert", [](const auto& c, const Binding& p) {
               const Rational a = p("a");
               const Rational head = a / ((1 - a) * (1 - a));
               return c.k(head) + c.wlambert(a);
           })});

    B.add("DM", "§1, \"obtained a one variable generalization\"", Mode::Analytic,
          {free_param("a"), free_param("b"), free_param("c")},
          {make_form("sum",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.poch(M(b / a), n) * c.k(pow(a, n)) / (c.binom(M(cc, n)) * c.poch(M(b), n));
                         });
                     }),
           make_form("difference", [lb_zero](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c");
               return c.sum_inf(0, lb_zero, [&](long n) {
                   return c.poch(M(b / cc), n) * c.k(pow(cc, n)) / c.poch(M(b), n) *
                          (c.mono(M(a, n)) / c.binom(M(a, n)) - c.mono(M(b, n)) / c.binom(M(b, n)));
               });
           })});

    B.add("DM-COR", "§1, \"a more general form of\"", Mode::FormalSeries, {free_param("z"), free_param("c")},
          {make_form("alternating",
                     [lb_tri](const auto& c, const Binding& p) {
                         const Rational z = p("z"), cc = p("c");
                         return c.sum_inf(1, lb_tri, [&](long n) {
                             return c.mono(M(sign(n - 1) * pow(z, n), tri(n))) / (c.binom(M(cc, n)) * c.poch(M(z, 1), n));
                         });
                     }),
           make_form("positive", [lb_lin](const auto& c, const Binding& p) {
               const Rational z = p("z"), cc = p("c");
               return c.sum_inf(1, lb_lin, [&](long n) {
                          return c.poch(M(z / cc, 1), n - 1) * c.mono(M(pow(cc, n), n)) / c.poch(M(z, 1), n);
                      }) *
                      (z / cc);
           })});

    const bool garvan_mut = mut.has("GARVAN.exponent");
    B.add("GARVAN", "§1, \"natural proof of the following identity\"", Mode::FormalSeries, {free_param("z")},
          {make_form("base-two",
                     [lb_sq, garvan_mut](const auto& c, const Binding& p) {
                         const Rational z = p("z");
                         return c.sum_inf(1, lb_sq, [&](long n) {
                             long e = garvan_mut ? n * (n + 1) : n * n;
                             return c.mono(M(sign(n - 1) * pow(z, n), e)) / (c.poch(M(z, 1), n, 2) * c.binom(M(z, 2 * n)));
                         });
                     }),
           make_form("base-one", [lb_tri](const auto& c, const Binding& p) {
               const Rational z = p("z");
               return c.sum_inf(1, lb_tri, [&](long n) {
                   return c.poch(M(1, 1), n - 1) * c.mono(M(pow(z, n), tri(n))) / c.poch(M(z, 1), n);
               });
           })});

    B.add("BEM", "§1, \"introduced a one-variable generalization of Dixit\"", Mode::Analytic,
          {free_param("a"), free_param("b"), free_param("c"), free_param("d")},
          {make_form("sum",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.poch(M(b / a), n) * c.poch(M(cc / d), n) * c.k(pow(a * d, n)) /
                                    (c.poch(M(b), n) * c.poch(M(cc, 1), n));
                         });
                     }),
           make_form("difference", [lb_zero](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d");
               const Rational ad = a * d, pre = (a - b) * (d - cc) / (ad - b);
               return c.sum_inf(0, lb_zero, [&](long n) {
                          return c.poch(M(a), n) * c.poch(M(b * d / cc), n) * c.k(pow(cc, n)) /
                                 (c.poch(M(b), n) * c.poch(M(ad), n)) *
                                 (c.mono(M(ad, n)) / c.binom(M(ad, n)) - c.mono(M(b, n)) / c.binom(M(b, n)));
                      }) *
                      pre;
           })})
        .guard = [](const Binding& p) { return p("a") * p("d") != p("b"); };

    B.add("ANDREWS-QS", "§1, \"q-series identity of Andrews\"", Mode::FormalSeries, {free_param("z"), free_param("c")},
          {make_form("squares",
                     [lb_sq](const auto& c, const Binding& p) {
                         const Rational z = p("z"), cc = p("c");
                         return c.sum_inf(1, lb_sq, [&](long n) {
                             return c.mono(M(pow(z * cc, n), n * n)) / (c.poch(M(z, 1), n) * c.poch(M(cc, 1), n));
                         });
                     }),
           make_form("geometric", [lb_lin](const auto& c, const Binding& p) {
               const Rational z = p("z"), cc = p("c");
               return c.sum_inf(1, lb_lin, [&](long n) { return c.mono(M(pow(cc, n), n)) / c.poch(M(z, 1), n); }) * z;
           })});

    B.add("DEMS", "§1, \"obtained a finite analogue of the identity\"", Mode::ExactPoint,
          {free_param("a"), free_param("b"), free_param("c"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(a), N - n) * c.poch(M(b / a), n) * c.poch(M(1, 1), n) *
                                    c.k(pow(a, n)) / (c.poch(M(a), N) * c.binom(M(cc, n)) * c.poch(M(b), n));
                         });
                     }),
           make_form("difference", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(cc, 1), N - n) * c.poch(M(b / cc), n - 1) * c.poch(M(1, 1), n) *
                          c.k(pow(cc, n - 1)) / (c.poch(M(cc, 1), N) * c.poch(M(b), n - 1)) *
                          (c.mono(M(a, n - 1)) / c.binom(M(a, n - 1)) - c.mono(M(b, n - 1)) / c.binom(M(b, n - 1)));
               });
           })});

    const bool dems_cor_literal = mut.has("DEMS-COR.literal");
    B.add("DEMS-COR", "§1, \"which is a finite analogue of\"", Mode::ExactPoint,
          {free_param("z"), free_param("c"), n_param()},
          {make_form("alternating",
                     [](const auto& c, const Binding& p) {
                         const Rational z = p("z"), cc = p("c");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.mono(M(sign(n - 1) * pow(z, n), tri(n))) * c.poch(M(1, 1), n) /
                                    (c.binom(M(cc, n)) * c.poch(M(z, 1), n));
                         });
                     }),
           make_form("positive", [dems_cor_literal](const auto& c, const Binding& p) {
               const Rational z = p("z"), cc = p("c");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                          return c.qbin(N, n) * c.poch(M(cc, 1), N - n) * c.poch(M(z / cc, 1), n - 1) *
                                 c.poch(M(1, 1), n) * c.mono(M(pow(cc, n), n)) /
                                 (c.poch(M(cc, 1), N) * c.poch(M(z, 1), dems_cor_literal ? n - 1 : n));
                      }) *
                      (z / cc);
           })})
        .corrections = {"right-hand denominator (zq)_{n-1} read as (zq)_n; the literal text fails at N = 1 while the "
                        "corrected form gives zq(1-q)/((1-cq)(1-zq)) on both sides"};

    B.add("DEMS-GARVAN", "§1, \"derived a finite analogue of Garvan's identity\"", Mode::ExactPoint, {free_param("z"), n_param()},
          {make_form("base-two",
                     [](const auto& c, const Binding& p) {
                         const Rational z = p("z");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n, 2) * c.poch(M(1, 2), n, 2) * c.mono(M(sign(n - 1) * pow(z, n), n * n)) /
                                    (c.poch(M(z, 1), n, 2) * c.binom(M(z, 2 * n)));
                         });
                     }),
           make_form("split", [](const auto& c, const Binding& p) {
               const Rational z = p("z");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                   auto odd = c.poch(M(1, 1), 2 * n - 2) * c.mono(M(pow(z, 2 * n - 1), n * (2 * n - 1))) /
                              c.poch(M(z, 1), 2 * n - 1);
                   auto even = c.poch(M(1, 1), 2 * n - 1) * c.mono(M(pow(z, 2 * n), n * (2 * n + 1))) /
                               c.poch(M(z, 1), 2 * n);
                   return c.qbin(N, n, 2) * (odd + even) * c.poch(M(1, 2), n, 2) / c.poch(M(z, 2 * N + 1), n, 2);
               });
           })});

    B.add("DP", "§1, \"finite analogue of the identity\"", Mode::ExactPoint,
          {free_param("a"), free_param("b"), free_param("c"), free_param("d"), n_param()},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d");
                         const Rational ad = a * d;
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.poch(M(1, 1), n) * c.poch(M(b / a), n) * c.poch(M(cc / d), n) *
                                    c.poch(M(ad), N - n) * c.k(pow(ad, n)) /
                                    (c.poch(M(b), n) * c.poch(M(cc, 1), n) * c.poch(M(ad), N));
                         });
                     }),
           make_form("difference", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d");
               const Rational ad = a * d, pre = (a - b) * (d - cc) / (ad - b);
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                          return c.qbin(N, n) * c.poch(M(1, 1), n) * c.poch(M(cc, 1), N - n) * c.poch(M(a), n - 1) *
                                 c.poch(M(b * d / cc), n - 1) * c.k(pow(cc, n - 1)) /
                                 (c.poch(M(b), n - 1) * c.poch(M(ad), n - 1) * c.poch(M(cc, 1), N)) *
                                 (c.mono(M(ad, n - 1)) / c.binom(M(ad, n - 1)) - c.mono(M(b, n - 1)) / c.binom(M(b, n - 1)));
                      }) *
                      pre;
           })})
        .guard = [](const Binding& p) { return p("a") * p("d") != p("b"); };

    B.add("DP-PHI21", "§1, \"an identity for a finite sum\"", Mode::FormalSeries,
          {free_param("c"), free_param("d"), n_param()},
          {make_form("phi-side",
                     [](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), d = p("d");
                         const long N = p.N;
                         auto weighted = c.sum(1, N, [&](long n) {
                             return c.qbin(N, n) * c.lin(d, M(cc), n) * c.mono(M(sign(n - 1) * n, tri(n))) /
                                    c.poch(M(cc, 1), n);
                         });
                         auto pre = c.pinf(M(cc / d)) * c.pinf(M(d, 1)) / (c.pinf(M(cc, 1)) * c.pinf(M(d, N + 1)));
                         auto phis = c.sum(1, N, [&](long n) {
                             auto outer = c.qbin(N, n) * c.mono(M(pow(d, n), n * (n + 1))) /
                                          (c.poch(M(d, 1), n) * c.binom(M(1, n)));
                             return c.times(outer, [&](const auto& cc2) {
                                 return cc2.phi(phi({M(d, 1), M(d, N + 1)}, {M(d, n + 1)}, M(cc / d, n)));
                             });
                         });
                         return weighted + pre * phis;
                     }),
           make_form("closed", [](const auto& c, const Binding& p) {
               const Rational cc = p("c"), d = p("d");
               const long N = p.N;
               auto head = (c.k(1) - c.poch(M(d, 1), N) / c.poch(M(cc, 1), N)) * (cc / (cc - d));
               auto tail = c.sum(1, N, [&](long n) {
                   return c.qbin(N, n) * c.poch(M(cc / d, 1), n) * c.poch(M(d, 1), N - n) * c.mono(M(pow(d, n), n)) /
                          c.binom(M(1, n));
               });
               return head + tail / c.poch(M(cc, 1), N);
           })})
        .guard = [](const Binding& p) { return p("c") != p("d"); };
    B.out.back().corrections = {"2phi1 argument cq^{n+1}/d read as cq^n/d; the printed argument fails at N = 1 and the "
                                "corrected one agrees with the main finite-sum theorem at e = 1"};
}

}  // namespace qsv::reg
