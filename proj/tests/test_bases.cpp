#include <gtest/gtest.h>

#include <random>

#include "hecke/bases.hpp"
#include "hecke/seminormal.hpp"

using namespace hecke;

namespace {

using MP = Multipartition;

Params nondeg(const Scalar& q, std::vector<Scalar> Q, int n) { return Params(NonDegenerateParams{q, std::move(Q), n}); }

// value of a 1x1 block
Scalar at1(const AlgebraElement& x, std::size_t b) { return x.block(b)(0, 0); }

}  // namespace

TEST(Elements, RankOneIsTrivial) {
    Representation rep(nondeg(3, {1}, 1));
    Bases B(rep);
    auto t = rep.index().all().front();
    EXPECT_EQ(B.m(t, t), rep.identity());
    EXPECT_EQ(B.n(t, t), rep.identity());
    EXPECT_EQ(B.F(t), rep.identity());
    EXPECT_EQ(B.f(t, t), rep.identity());
    EXPECT_EQ(B.g(t, t), rep.identity());
}

TEST(Elements, RankTwoValues) {
    const Scalar q = 3;
    Representation rep(nondeg(q, {1}, 2));
    Bases B(rep);
    auto row = initial_tableau(MP::of({{2}}));
    auto col = initial_tableau(MP::of({{1, 1}}));
    auto m = B.m(row, row);
    EXPECT_EQ(at1(m, 0), 1 + q);
    EXPECT_EQ(at1(m, 1), 0);
    EXPECT_EQ(B.n(row, row), rep.identity());
    auto n = B.n(col, col);
    EXPECT_EQ(at1(n, 0), 0);
    EXPECT_EQ(at1(n, 1), 1 + 1 / q);
    auto F = B.F(row);
    EXPECT_EQ(F, (rep.jm(2) - rep.scalar(1 / q)) * (1 / (q - 1 / q)));
    EXPECT_EQ(at1(F, 0), 1);
    EXPECT_EQ(at1(F, 1), 0);
    EXPECT_EQ(B.f(row, row) * B.f(row, row), B.f(row, row) * (1 + q));
    EXPECT_EQ(B.gamma_prime().at(col.conjugate()), 1 + 1 / q);
    EXPECT_EQ(B.g(col, col), B.F(col) * (1 + 1 / q));
}

TEST(Elements, LevelTwoCyclotomicFactor) {
    auto p = Params::defaults(Variant::nondegenerate, 2, 1);
    Representation rep(p);
    Bases B(rep);
    // ((1),0): one factor L_1 - Q_2
    auto t = initial_tableau(MP::of({{1}, {}}));
    auto m = B.m(t, t);
    const auto& Q = p.nondegenerate().Q;
    EXPECT_EQ(at1(m, 0), Q[0] - Q[1]);
    EXPECT_EQ(at1(m, 1), 0);
    // (0,(1)): the product is empty
    auto u = initial_tableau(MP::of({{}, {1}}));
    EXPECT_EQ(B.m(u, u), rep.identity());
}

TEST(Elements, IdempotentsResolveIdentity) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate}) {
        Representation rep(Params::defaults(v, 2, 3));
        Bases B(rep);
        auto sum = rep.zero();
        for (const auto& t : rep.index().all()) {
            sum += B.F(t);
            EXPECT_EQ(B.F(t) * B.F(t), B.F(t));
            EXPECT_EQ(B.F(t), rep.unit(t, t));
        }
        EXPECT_EQ(sum, rep.identity());
    }
}

TEST(Elements, SeminormalShape) {
    Representation rep(Params::defaults(Variant::nondegenerate, 2, 3));
    Bases B(rep);
    for (std::size_t b = 0; b < rep.index().num_blocks(); ++b)
        for (const auto& s : rep.index().tableaux(b))
            for (const auto& t : rep.index().tableaux(b)) {
                const auto& f = B.f(s, t);
                EXPECT_EQ(f.support_size(), 1u);
                auto ratio = f.ratio_to(rep.unit(s, t));
                ASSERT_TRUE(ratio.has_value());
                EXPECT_EQ(*ratio, B.gamma().at(s));
            }
}

TEST(Gamma, LevelOneRowShapes) {
    for (int n = 1; n <= 4; ++n) {
        auto p = Params::defaults(Variant::nondegenerate, 1, n);
        auto gt = gamma_table(p);
        auto gp = gamma_prime_table(p);
        auto t = initial_tableau(MP::of({{n}}));
        Scalar q = p.nondegenerate().q;
        EXPECT_EQ(gt.at(t), q_factorial(n, q));
        EXPECT_EQ(gp.at(t), q_factorial(n, 1 / q));
    }
}

TEST(Gamma, HookExample) {
    auto lam = MP::of({{2, 1}});
    auto t = apply_word(initial_tableau(lam), PermWord{{2}});
    for (const char* qs : {"3", "5", "-2"}) {
        Scalar q = parse_scalar(qs);
        auto p = nondeg(q, {1}, 3);
        auto gt = gamma_table(p);
        auto gp = gamma_prime_table(p);
        Scalar qi = 1 / q;
        Scalar den = (q - qi) * (q - qi);
        EXPECT_EQ(gt.at(t), (q * q - qi) * (q - 1) * (1 + q) / den) << qs;
        EXPECT_EQ(gp.at(t), (qi * qi - q) * (qi - 1) * (1 + qi) / den) << qs;
        EXPECT_EQ(gt.at(t.conjugate()), 1 + q) << qs;
    }
}

TEST(Gamma, DegenerateHookExample) {
    auto p = Params(DegenerateParams{{Scalar(0)}, 3});
    auto lam = MP::of({{2, 1}});
    auto t = apply_word(initial_tableau(lam), PermWord{{2}});
    auto r = gamma_table(p);
    auto rp = gamma_prime_table(p);
    EXPECT_EQ(r.at(t), Scalar(3, 2));
    EXPECT_EQ(rp.at(t), Scalar(3, 2));
    EXPECT_EQ(r.at(t.conjugate()), 2);
    EXPECT_EQ(r.at(initial_tableau(MP::of({{3}}))), 6);
}

TEST(Gamma, NonzeroAndRatioLaw) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate}) {
        auto p = Params::defaults(v, 2, 4);
        auto gt = gamma_table(p);
        for (const auto& t : gt.tableaux()) {
            EXPECT_NE(gt.at(t), 0);
            for (int i = 1; i < 4; ++i) {
                auto s = t.swapped(i);
                if (!s) continue;
                Scalar a = p.residue(t, i);
                Scalar b = p.residue(t, i + 1);
                // the swap moves the residues; ratio law from the seminormal recursion
                if (tableau_strictly_dominates(t, *s))
                    EXPECT_EQ(gt.at(*s) / gt.at(t), gamma_step_ratio(p, a, b)) << to_string(t) << " i=" << i;
            }
        }
    }
}

TEST(Gamma, ChainIndependence) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate}) {
        auto p = Params::defaults(v, 2, 4);
        auto gt = gamma_table(p);
        for (const auto& t : gt.tableaux()) {
            auto w = reduced_word_between(initial_tableau(t.shape()), t, WordOrder::smallest_first);
            EXPECT_EQ(gamma_along_word(p, t.shape(), w), gt.at(t));
        }
    }
}

TEST(Gamma, PrimedIsSubstitution) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate}) {
        auto p = Params::defaults(v, 2, 3);
        auto gp = gamma_prime_table(p);
        auto direct = gamma_table(p.primed());
        for (const auto& t : gp.tableaux()) EXPECT_EQ(gp.at(t), direct.at(t));
    }
}

TEST(Gamma, MatrixOracle) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate})
        for (int l = 1; l <= 2; ++l) {
            Representation rep(Params::defaults(v, l, 3));
            Bases B(rep);
            for (const auto& t : rep.index().all()) {
                auto sq = (B.f(t, t) * B.f(t, t)).ratio_to(B.f(t, t));
                ASSERT_TRUE(sq.has_value());
                EXPECT_EQ(*sq, B.gamma().at(t));
                auto gq = (B.g(t, t) * B.g(t, t)).ratio_to(B.g(t, t));
                ASSERT_TRUE(gq.has_value());
                EXPECT_EQ(*gq, B.gamma_prime().at(t.conjugate()));
            }
        }
}

TEST(Coefficients, ExamplesAndCrossCheck) {
    Scalar q = 3;
    auto p = nondeg(q, {1}, 3);
    auto s = initial_tableau(MP::of({{2, 1}}));
    EXPECT_EQ(coefficient_A(p, s, 2), (q - 1) / q / (1 / q - q));
    EXPECT_EQ(same_row_eigenvalue(p), q);
    for (auto v : {Variant::nondegenerate, Variant::degenerate}) {
        auto pp = Params::defaults(v, 2, 3);
        auto gt = gamma_table(pp);
        for (const auto& a : gt.tableaux())
            for (int i = 1; i < 3; ++i) {
                auto b = a.swapped(i);
                if (!b || !tableau_strictly_dominates(*b, a)) continue;
                EXPECT_EQ(coefficient_B(pp, a, i) * gt.at(*b) / gt.at(a), 1) << to_string(a) << " i=" << i;
            }
    }
}

TEST(Phi, Basics) {
    Representation rep(nondeg(3, {1}, 3));
    Bases B(rep);
    auto lam = MP::of({{2, 1}});
    auto top = initial_tableau(lam);
    auto t = apply_word(top, PermWord{{2}});
    EXPECT_EQ(B.phi(top), rep.identity());
    EXPECT_EQ(B.phi(t), rep.generator(2) - rep.scalar(coefficient_A(rep.params(), top, 2)));
}

TEST(Phi, InvertibleAndReconstructs) {
    Representation rep(Params::defaults(Variant::nondegenerate, 2, 3));
    Bases B(rep);
    for (std::size_t b = 0; b < rep.index().num_blocks(); ++b) {
        const auto& lam = rep.index().shape(b);
        auto top = initial_tableau(lam);
        for (const auto& t : rep.index().tableaux(b)) {
            const auto& phi = B.phi(t);
            for (std::size_t c = 0; c < phi.num_blocks(); ++c) EXPECT_NE(determinant(phi.block(c)), 0);
            for (const auto& s : rep.index().tableaux(b))
                EXPECT_EQ(B.phi_star(s) * B.f(top, top) * B.phi(t), B.f(s, t));
        }
    }
}

TEST(Star, Properties) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate}) {
        Representation rep(Params::defaults(v, 2, 3));
        Bases B(rep);
        for (int i = 0; i < 3; ++i) EXPECT_EQ(star(rep, rep.generator(i), B.gamma()), rep.generator(i));
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> letter(0, 2);
        for (int trial = 0; trial < 5; ++trial) {
            PermWord a;
            PermWord b;
            for (int k = 0; k < 4; ++k) {
                a.letters.push_back(letter(rng));
                b.letters.push_back(letter(rng));
            }
            auto x = rep.word(a) + rep.jm(2);
            auto y = rep.word(b) - rep.jm(3);
            EXPECT_EQ(star(rep, x * y, B.gamma()), star(rep, y, B.gamma()) * star(rep, x, B.gamma()));
            EXPECT_EQ(star(rep, star(rep, x, B.gamma()), B.gamma()), x);
        }
        for (std::size_t blk = 0; blk < rep.index().num_blocks(); ++blk)
            for (const auto& s : rep.index().tableaux(blk))
                for (const auto& t : rep.index().tableaux(blk)) {
                    EXPECT_EQ(star(rep, B.m(s, t), B.gamma()), B.m(t, s));
                    EXPECT_EQ(star(rep, B.n(s, t), B.gamma()), B.n(t, s));
                }
    }
}

TEST(DualBase, ClosedFormMatchesSubstitution) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate})
        for (int l = 1; l <= 2; ++l)
            for (int n = 1; n <= 4; ++n) {
                auto p = Params::defaults(v, l, n);
                auto gp = gamma_prime_table(p);
                for (const auto& lam : multipartitions(l, n)) {
                    auto t = initial_tableau(lam.conjugate());
                    EXPECT_EQ(dual_gamma_base_formula(p, lam), gp.at(t)) << to_string(lam);
                }
            }
    auto p = nondeg(3, {1}, 3);
    auto lam = MP::of({{2, 1}});
    EXPECT_EQ(dual_gamma_base_formula(p, lam), q_factorial(2, Scalar(3)) / 3);
}
