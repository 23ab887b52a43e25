// Base q^2 chains and the finite-sum identities built on them.
#include "registry_util.hpp"

namespace qsv::reg {

namespace {

// Right side of the finite Garvan generalization; also the third form of S1.
template <class C>
auto garvan_split(const C& c, const Rational& z, const Rational& d, long N) {
    return c.sum(1, N, [&](long n) {
        auto odd = c.poch(M(d, 1), 2 * n - 2) * c.mono(M(pow(z, 2 * n - 1), n * (2 * n - 1))) / c.poch(M(z, 1), 2 * n - 1);
        auto even = c.poch(M(d, 1), 2 * n - 1) * c.mono(M(pow(z, 2 * n), n * (2 * n + 1))) / c.poch(M(z, 1), 2 * n);
        return c.qbin(N, n, 2) * (odd + even) * c.poch(M(1, 2), n, 2) / c.poch(M(d * z, 2 * N + 1), n, 2);
    });
}

// Summand of the alternating finite sum in c, d, e.
template <class C>
auto alt_term(const C& c, const Rational& cc, const Rational& d, const Rational& e, long N, long n) {
    return c.qbin(N, n) * c.lin(d, M(cc), n) * rpoch(c, e, n - 1) * c.mono(M(sign(n - 1), tri(n))) /
           (c.poch(M(cc, 1), n) * c.poch(M(1, 1), n - 1));
}

// Terminating closed form of the alternating sum.
template <class C>
auto alt_closed(const C& c, const Rational& cc, const Rational& d, const Rational& e, long N) {
    return c.poch(M(d * e, 1), N) / c.poch(M(cc, 1), N) * c.sum(1, N, [&](long n) {
               return c.poch(M(1, -N), n) * c.lin(cc, M(d), n) * c.poch(M(e, 1), n - 1) * c.qp((N + 1) * n) /
                      (c.poch(M(d * e, 1), n) * c.poch(M(1, 1), n) * c.poch(M(1, 1), n - 1));
           });
}

// Double sum over k and m with an inner 2phi1, built from products convergent in the formal sense.
template <class C>
auto double_sum(const C& c, const Rational& cc, const Rational& d, const Rational& e, long N) {
    auto pre = c.pinf(M(cc / d)) * c.pinf(M(d * e, 1)) * c.pinf(M(1 / e, 1)) /
               (c.pinf(M(cc, 1)) * c.pinf(M(d * e, N + 1)) * c.pinf(M(1, 1)));
    auto outer = c.sum(1, N, [&](long k) {
        auto head = c.qbin(N, k) * c.mono(M(pow(e, k - 1) * pow(d, k), k * (k + 1))) /
                    (c.poch(M(d * e, 1), k) * c.binom(M(1, k)));
        return c.times(head, [&](const auto& ck) {
            return ck.sum_inf(0, [k](long m) { return k * m; }, [&](long m) {
                auto w = ck.poch(M(d, 1), m) * ck.poch(M(d * e, N + 1), m) * ck.mono(M(pow(cc / d, m), k * m)) /
                         (ck.poch(M(d * e, k + 1), m) * ck.poch(M(1, 1), m));
                return ck.times(w, [&](const auto& cm) {
                    return cm.phi(phi({M(e), M(d * e, N + m + 1)}, {M(d * e, k + m + 1)}, M(1 / e, k)));
                });
            });
        });
    });
    return pre * outer;
}

}  // namespace

void add_chains(Builder& B, const Mutations&) {
    const auto lb_zero = [](long) { return 0L; };

    const auto s1_first = make_form("first", [](const auto& c, const Binding& p) {
        const Rational z = p("z"), d = p("d");
        const long N = p.N;
        return c.sum(1, N, [&](long n) {
            return c.qbin(N, n, 2) * c.poch(M(1, 2), n, 2) * c.poch(M(d, 2), n - 1, 2) * c.poch(M(z, 1), N - n, 2) *
                   c.mono(M(pow(z, n), n)) / (c.poch(M(z, 2), n, 2) * c.poch(M(z, 1), N, 2));
        });
    });
    const auto s1_second = make_form("second", [](const auto& c, const Binding& p) {
        const Rational z = p("z"), d = p("d");
        const long N = p.N;
        return c.sum(1, N, [&](long n) {
            return c.qbin(N, n, 2) * c.poch(M(1, 2), n, 2) * c.poch(M(d, 1), n - 1, 2) * c.poch(M(z, 2), N - n, 2) *
                   c.mono(M(pow(z, n), 2 * n - 1)) / (c.poch(M(z, 1), n, 2) * c.poch(M(z, 2), N, 2));
        });
    });
    const auto s1_third = make_form("third", [](const auto& c, const Binding& p) {
        return garvan_split(c, p("z"), p("d"), p.N);
    });

    B.add("LEM-6-1", "§6, \"For $N\\in\\mathbb{N}$, define\"", Mode::ExactPoint, {free_param("z"), free_param("d"), n_param()}, {s1_first, s1_second});
    B.add("LEM-6-2", "§6, \"For $N\\in\\mathbb{N}$, define\" (third form)", Mode::ExactPoint, {free_param("z"), free_param("d"), n_param()},
          {s1_first, s1_second, s1_third});

    B.add("COR-6-3", "§6, \"Here are some immediate implications\"", Mode::ExactPoint, {free_param("d"), n_param()},
          {make_form("alternating",
                     [](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n, 2) * c.lin(d, M(1, 2), n - 1, 2) * c.mono(M(sign(n - 1), n * n)) /
                                    c.poch(M(1, 1), n, 2);
                         });
                     }),
           make_form("binomial",
                     [](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n, 2) * c.poch(M(d, 2), n - 1, 2) * c.poch(M(1, 1), N - n, 2) * c.qp(n) /
                                    c.poch(M(1, 1), N, 2);
                         });
                     }),
           make_form("plain",
                     [](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         return c.sum(1, p.N, [&](long n) {
                             return c.poch(M(d, 1), n - 1, 2) * c.qp(2 * n - 1) / c.poch(M(1, 1), n, 2);
                         });
                     }),
           make_form("mixed-base", [](const auto& c, const Binding& p) {
               const Rational d = p("d");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                   return c.qbin(N, n, 2) * c.poch(M(1, 2), n - 1, 2) * c.poch(M(d, 1), 2 * n - 1) *
                          c.binom(M(d, 4 * n - 1)) * c.qp(n * (2 * n - 1)) /
                          (c.poch(M(d, 2 * N + 1), n, 2) * c.poch(M(1, 1), 2 * n - 1) * c.binom(M(d, 2 * n - 1)));
               });
           })});

    B.add("COR-6-4", "§6, \"gives a one variable generalization to\"", Mode::Analytic, {free_param("d")},
          {make_form("alternating",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         const Rational inv = Rational(1) / (1 - d);
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.lin(d, M(1), n, 2) * c.mono(M(sign(n), n * n)) / c.poch(M(1, 1), 2 * n);
                         }) *
                                inv;
                     }),
           make_form("base-two",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.poch(M(d, 2), n - 1, 2) * c.qp(n) / c.poch(M(1, 2), n, 2);
                         });
                     }),
           make_form("odd",
                     [lb_zero](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         return c.sum_inf(1, lb_zero, [&](long n) {
                             return c.poch(M(d, 1), n - 1, 2) * c.qp(2 * n - 1) / c.poch(M(1, 1), n, 2);
                         });
                     }),
           make_form("mixed-base", [lb_zero](const auto& c, const Binding& p) {
               const Rational d = p("d");
               return c.sum_inf(1, lb_zero, [&](long n) {
                   return c.poch(M(d, 1), 2 * n - 1) * c.binom(M(d, 4 * n - 1)) * c.qp(n * (2 * n - 1)) /
                          (c.poch(M(1, 1), 2 * n - 1) * c.binom(M(1, 2 * n)) * c.binom(M(d, 2 * n - 1)));
               });
           })})
        .guard = [](const Binding& p) { return p("d") != 1; };

    B.add("COR-6-5", "§6, \"A further implication of Theorem\"", Mode::ExactPoint, {free_param("d"), n_param()},
          {make_form("closed",
                     [](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         const long N = p.N;
                         return (c.k(1) - c.poch(M(d, 2), N, 2) / c.poch(M(1, 3), N, 2)) / c.lin(d, M(1, 1), 1);
                     }),
           make_form("alternating",
                     [](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                                    return c.qbin(N, n, 2) * c.lin(d, M(1, 1), n, 2) *
                                           c.mono(M(sign(n - 1), n * (n + 1))) / c.poch(M(1, 3), n, 2);
                                }) /
                                c.lin(d, M(1, 1), 1);
                     }),
           make_form("binomial",
                     [](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return c.qbin(N, n, 2) * c.poch(M(d, 1), n - 1, 2) * c.poch(M(1, 3), N - n, 2) *
                                    c.qp(3 * n - 1) / c.poch(M(1, 3), N, 2);
                         });
                     }),
           make_form("plain",
                     [](const auto& c, const Binding& p) {
                         const Rational d = p("d");
                         return c.sum(1, p.N, [&](long n) {
                             return c.poch(M(d, 2), n - 1, 2) * c.qp(2 * n) / c.poch(M(1, 3), n, 2);
                         });
                     }),
           make_form("mixed-base", [](const auto& c, const Binding& p) {
               const Rational d = p("d");
               const long N = p.N;
               return c.sum(1, N, [&](long n) {
                          return c.qbin(N, n, 2) * c.poch(M(1, 2), n - 1, 2) * c.poch(M(d, 1), 2 * n - 1) *
                                 c.binom(M(d, 4 * n)) * c.qp(2 * n * n + n - 1) /
                                 (c.poch(M(d, 2 * N + 2), n, 2) * c.poch(M(1, 1), 2 * n - 1) *
                                  c.binom(M(d, 2 * n - 1)) * c.binom(M(1, 2 * n + 1)));
                      }) *
                      c.binom(M(1, 1));
           })})
        .guard = [](const Binding& p) { return !p.q || p("d") != *p.q; };

    B.add("LEM-7-2", "§7, \"Putting $z=1$ in Corollary\"", Mode::ExactPoint, {free_param("c"), free_param("d"), free_param("e"), n_param()},
          {make_form("alternating",
                     [](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), d = p("d"), e = p("e");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) { return alt_term(c, cc, d, e, N, n); });
                     }),
           make_form("terminating", [](const auto& c, const Binding& p) {
               return alt_closed(c, p("c"), p("d"), p("e"), p.N);
           })});

    B.add("LEM-7-1", "§7, \"Using van Hamme's identity\"", Mode::FormalSeries, {free_param("c"), free_param("d"), free_param("e"), n_param()},
          {make_form("divisor-weighted",
                     [](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), d = p("d"), e = p("e");
                         const long N = p.N;
                         return c.sum(1, N, [&](long n) {
                             return alt_term(c, cc, d, e, N, n) *
                                    c.sum(1, n, [&](long k) { return c.qp(k) / c.binom(M(1, k)); });
                         });
                     }),
           make_form("double-sum", [](const auto& c, const Binding& p) {
               return double_sum(c, p("c"), p("d"), p("e"), p.N);
           })});

    B.add("THM-7-3", "§7, \"identity that involves a finite sum\"", Mode::FormalSeries, {free_param("c"), free_param("d"), free_param("e"), n_param()},
          {make_form("weighted",
                     [](const auto& c, const Binding& p) {
                         const Rational cc = p("c"), d = p("d"), e = p("e");
                         const long N = p.N;
                         auto first = c.sum(1, N, [&](long n) { return alt_term(c, cc, d, e, N, n) * Rational(n); });
                         return first + double_sum(c, cc, d, e, N);
                     }),
           make_form("closed", [](const auto& c, const Binding& p) {
               const Rational cc = p("c"), d = p("d"), e = p("e");
               const long N = p.N;
               const Rational ratio = cc / (cc - d);
               auto head = alt_closed(c, cc, d, e, N) * ratio;
               auto pre = c.poch(M(1 / e, 1), N - 1) / (c.poch(M(cc, 1), N) * c.poch(M(1, 1), N - 1));
               auto body = c.sum(1, N, [&](long k) {
                   return c.qbin(N, k) * c.poch(M(cc / d, 1), k) * c.poch(M(d * e, 1), N - k) *
                          c.mono(M(pow(d, k) * pow(e, k - 1), k)) / c.binom(M(1, k)) *
                          c.phi(phi({M(1, k - N), M(e), M(cc * e, 1)}, {M(d * e, 1), M(e, 1 - N)}, M(1, 1)));
               });
               return head + pre * body;
           })})
        .guard = [](const Binding& p) { return p("c") != p("d") && p("e") != 1; };

    B.add("VAN-HAMME", "§7, \"Using van Hamme's identity\" (quoted)", Mode::ExactPoint, {n_param()},
          {make_form("divisor",
                     [](const auto& c, const Binding& p) {
                         return c.sum(1, p.N, [&](long k) { return c.qp(k) / c.binom(M(1, k)); });
                     }),
           make_form("alternating", [](const auto& c, const Binding& p) {
               const long N = p.N;
               return c.sum(1, N, [&](long k) {
                   return c.qbin(N, k) * c.mono(M(sign(k - 1), tri(k))) / c.binom(M(1, k));
               });
           })});

    B.add("GUO-ZHANG", "§7, \"proved the following identity for\"", Mode::ExactPoint, {free_param("x"), n_param(), index_param("m")},
          {make_form("sum",
                     [](const auto& c, const Binding& p) {
                         const Rational x = p("x");
                         const long N = p.N, m = p.index("m");
                         return c.sum(0, N, [&](long k) {
                             if (k == m) return c.k(0);
                             return c.qbin(N, k) * rpoch(c, x, k) * c.poch(M(x), N - k) / c.binom(M(1, k - m));
                         });
                     }),
           make_form("closed", [](const auto& c, const Binding& p) {
               const Rational x = p("x");
               const long N = p.N, m = p.index("m");
               auto poles = c.sum(0, N - 1, [&](long k) { return c.mono(M(x, k - m)) / c.binom(M(x, k - m)); });
               auto unit = c.sum(0, N, [&](long k) {
                   if (k == m) return c.k(0);
                   return c.qp(k - m) / c.binom(M(1, k - m));
               });
               return c.mono(M(sign(m), tri(m))) * c.qbin(N, m) * c.poch(M(x, -m), N) * (poles - unit);
           })})
        .guard = [](const Binding& p) { return off_q_powers(p, p("x"), p.index("m") - p.N + 1, p.index("m")); };
}

}  // namespace qsv::reg
