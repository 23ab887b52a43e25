// Classical hypergeometric formulas and elementary finite facts.
#include "registry_util.hpp"

namespace qsv::reg {

void add_basic(Builder& B, const Mutations& mut) {
    B.add("QBINOM-THM", "§3, \"the $q-$binomial theorem is given by\"", Mode::FormalSeries, {free_param("a"), free_param("z")},
          {make_form("phi",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), z = p("z");
                         return c.phi(phi({M(a)}, {}, M(z, 1)));
                     }),
           make_form("product", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), z = p("z");
               return c.pinf(M(a * z, 1)) / c.pinf(M(z, 1));
           })});

    B.add("HEINE", "§3, \"famous Heine transformation\"", Mode::Analytic, {free_param("a"), free_param("b"), free_param("c"), free_param("z")},
          {make_form("phi",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c"), z = p("z");
                         return c.phi(phi({M(a), M(b)}, {M(cc)}, M(z)));
                     }),
           make_form("transformed", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), z = p("z");
               return c.pinf(M(a * z)) * c.pinf(M(b)) / (c.pinf(M(z)) * c.pinf(M(cc))) *
                      c.phi(phi({M(cc / b), M(z)}, {M(a * z)}, M(b)));
           })});

    B.add("QGAUSS", "§3, \"The $q$-Gauss sum is\"", Mode::Analytic,
          {box_param("a", R(1), R(3)), box_param("b", R(1), R(3)), free_param("c")},
          {make_form("phi",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c");
                         return c.phi(phi({M(a), M(b)}, {M(cc)}, M(cc / (a * b))));
                     }),
           make_form("product", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c");
               return c.pinf(M(cc / a)) * c.pinf(M(cc / b)) / (c.pinf(M(cc)) * c.pinf(M(cc / (a * b))));
           })});

    B.add("PHI32-III9", "§3, \"two ${}_{3}\\phi_{2}$ transformation formula\" (first)", Mode::Analytic,
          {box_param("a", R(2), R(4)), box_param("b", R(2), R(4)), box_param("c", R(2), R(4)), free_param("d"),
           free_param("e")},
          {make_form("phi",
                     [](const auto& c, const Binding& p) {
                         const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d"), e = p("e");
                         return c.phi(phi({M(a), M(b), M(cc)}, {M(d), M(e)}, M(d * e / (a * b * cc))));
                     }),
           make_form("transformed", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), d = p("d"), e = p("e");
               return c.pinf(M(e / a)) * c.pinf(M(d * e / (b * cc))) / (c.pinf(M(e)) * c.pinf(M(d * e / (a * b * cc)))) *
                      c.phi(phi({M(a), M(d / b), M(d / cc)}, {M(d), M(d * e / (b * cc))}, M(e / a)));
           })});

    B.add("PHI32-III12", "§3, \"two ${}_{3}\\phi_{2}$ transformation formula\" (second)", Mode::ExactPoint,
          {free_param("b"), free_param("c"), free_param("d"), free_param("e"), n_param()},
          {make_form("phi",
                     [](const auto& c, const Binding& p) {
                         const Rational b = p("b"), cc = p("c"), d = p("d"), e = p("e");
                         return c.phi(phi({M(1, -p.N), M(b), M(cc)}, {M(d), M(e)}, M(1, 1)));
                     }),
           make_form("transformed", [](const auto& c, const Binding& p) {
               const Rational b = p("b"), cc = p("c"), d = p("d"), e = p("e");
               const long N = p.N;
               return c.poch(M(e / cc), N) / c.poch(M(e), N) * c.k(pow(cc, N)) *
                      c.phi(phi({M(1, -N), M(cc), M(d / b)}, {M(d), M(cc / e, 1 - N)}, M(b / e, 1)));
           })})
        .guard = [](const Binding& p) { return off_q_powers(p, p("c") / p("e"), 0, p.N - 1); };
    B.out.back().corrections = {"argument q read as Bq/E and prefactor c^N read as C^N; the printed form fails at N = 1 "
                                "and the standard form holds"};

    // alpha, beta, gamma, tau -> a, b, c, t
    const auto fin_heine_lhs = [](const auto& c, const Binding& p) {
        const Rational a = p("a"), b = p("b"), cc = p("c"), t = p("t");
        const long N = p.N;
        return c.phi(phi({M(1, -N), M(a), M(b)}, {M(cc), M(1 / t, 1 - N)}, M(1, 1)));
    };
    B.add("FIN-HEINE", "§3, \"A finite Heine transformation given by Andrews\"", Mode::ExactPoint,
          {free_param("a"), free_param("b"), free_param("c"), free_param("t"), n_param()},
          {make_form("phi", fin_heine_lhs), make_form("transformed", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), t = p("t");
               const long N = p.N;
               return c.poch(M(b), N) * c.poch(M(a * t), N) / (c.poch(M(cc), N) * c.poch(M(t), N)) *
                      c.phi(phi({M(1, -N), M(cc / b), M(t)}, {M(a * t), M(1 / b, 1 - N)}, M(1, 1)));
           })});

    B.add("FIN-HEINE-COR", "§3, \"a corollary of\"", Mode::ExactPoint,
          {free_param("a"), free_param("b"), free_param("c"), free_param("t"), n_param()},
          {make_form("phi", fin_heine_lhs), make_form("transformed", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), b = p("b"), cc = p("c"), t = p("t");
               const long N = p.N;
               return c.poch(M(cc / b), N) * c.poch(M(b * t), N) / (c.poch(M(cc), N) * c.poch(M(t), N)) *
                      c.phi(phi({M(1, -N), M(a * b * t / cc), M(b)}, {M(b * t), M(b / cc, 1 - N)}, M(1, 1)));
           })})
        .guard = [](const Binding& p) { return off_q_powers(p, p("c") / p("b"), 1 - p.N, 0); };

    B.add("BASIC-4-1", "§3, \"Some basic formula from\" (first)", Mode::ExactPoint, {free_param("x"), n_param(), index_param("k")},
          {make_form("reversed",
                     [](const auto& c, const Binding& p) {
                         const Rational x = p("x");
                         return c.poch(M(1 / x, -p.N), p.index("k"));
                     }),
           make_form("forward", [](const auto& c, const Binding& p) {
               const Rational x = p("x");
               const long N = p.N, k = p.index("k");
               return c.poch(M(x, N - k + 1), k) * c.mono(M(sign(k) / pow(x, k), tri(k - 1) - N * k));
           })});

    B.add("BASIC-4-2", "§3, \"Some basic formula from\" (second)", Mode::ExactPoint, {free_param("x"), n_param(), index_param("k")},
          {make_form("ratio",
                     [](const auto& c, const Binding& p) {
                         const Rational x = p("x");
                         const long N = p.N, k = p.index("k");
                         return c.poch(M(1, -N), k) / c.poch(M(1 / x, -N), k);
                     }),
           make_form("shifted",
                     [](const auto& c, const Binding& p) {
                         const Rational x = p("x");
                         const long N = p.N, k = p.index("k");
                         return c.poch(M(1, N - k + 1), k) * c.k(pow(x, k)) / c.poch(M(x, N - k + 1), k);
                     }),
           make_form("complementary", [](const auto& c, const Binding& p) {
               const Rational x = p("x");
               const long N = p.N, k = p.index("k");
               return c.poch(M(1, 1), N) * c.poch(M(x, 1), N - k) * c.k(pow(x, k)) /
                      (c.poch(M(1, 1), N - k) * c.poch(M(x, 1), N));
           })});

    const bool cl_mut = mut.has("CORTEEL-LOVEJOY.index");
    B.add("CORTEEL-LOVEJOY", "§3, \"a result of Corteel and Lovejoy\"", Mode::ExactPoint, {free_param("a"), free_param("c"), n_param()},
          {make_form("sum",
                     [cl_mut](const auto& c, const Binding& p) {
                         const Rational a = p("a"), cc = p("c");
                         const long N = p.N;
                         return c.sum(0, N, [&](long n) {
                             return c.qbin(N, n) * c.lin(a, M(-1), n) * c.mono(M(pow(cc, n), tri(n))) /
                                    c.poch(M(cc, 1), cl_mut ? n + 1 : n);
                         });
                     }),
           make_form("product", [](const auto& c, const Binding& p) {
               const Rational a = p("a"), cc = p("c");
               return c.poch(M(-a * cc, 1), p.N) / c.poch(M(cc, 1), p.N);
           })});
}

}  // namespace qsv::reg
