#include <gtest/gtest.h>

#include <set>

#include "hecke/params.hpp"

using namespace hecke;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

// [k]_q by the closed form (q^k - 1)/(q - 1), an independent oracle for q != 1.
Scalar q_int_closed(int k, const Scalar& q) { return (power(q, k) - 1) / (q - 1); }

}  // namespace

TEST(Scalar, ParseAndPrint) {
    EXPECT_EQ(S("3"), Scalar(3));
    EXPECT_EQ(S("-2/4"), Scalar(-1, 2));
    EXPECT_EQ(to_string(S("6/4")), "3/2");
    EXPECT_EQ(to_string(S("+5")), "5");
    EXPECT_THROW(S("1.5"), std::invalid_argument);
    EXPECT_THROW(S("1/0"), std::invalid_argument);
    EXPECT_THROW(S(""), std::invalid_argument);
    auto list = parse_scalar_list("1,-2/3,7");
    ASSERT_EQ(list.size(), 3u);
    EXPECT_EQ(list[1], Scalar(-2, 3));
    EXPECT_THROW(parse_scalar_list("1,,2"), std::invalid_argument);
}

TEST(Scalar, LowestTermsPositiveDenominator) {
    Scalar x = S("6/4");
    EXPECT_EQ(x.get_den(), 2);
    Scalar y = Scalar(1) / Scalar(-3);
    EXPECT_GT(y.get_den(), 0);
    EXPECT_EQ(to_string(y), "-1/3");
}

TEST(Scalar, Powers) {
    EXPECT_EQ(power(S("2/3"), 3), S("8/27"));
    EXPECT_EQ(power(S("2/3"), -2), S("9/4"));
    EXPECT_EQ(power(S("5"), 0), 1);
    EXPECT_THROW(power(Scalar(0), -1), std::domain_error);
}

TEST(QIntegers, Values) {
    EXPECT_EQ(q_factorial(3, Scalar(2)), 21);
    EXPECT_EQ(mp_q_factorial(Multipartition::of({{2, 1}}), Scalar(5)), 6);
    EXPECT_EQ(mp_q_factorial(Multipartition::of({{}}), Scalar(5)), 1);
    for (const char* q : {"3", "-2", "2/3", "-5/7"})
        for (int k = 0; k <= 6; ++k) EXPECT_EQ(q_int(k, S(q)), q_int_closed(k, S(q))) << q << " " << k;
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(q_int(k, Scalar(1)), k);
}

TEST(Semisimple, NonDegenerate) {
    EXPECT_FALSE(semisimple_nondegenerate(Scalar(-1), {Scalar(1)}, 2));
    EXPECT_FALSE(semisimple_nondegenerate(Scalar(2), {Scalar(1), Scalar(2)}, 2));
    EXPECT_EQ(*semisimplicity_violation(Scalar(2), {Scalar(1), Scalar(2)}, 2), "q^1·Q_1 − Q_2 = 0");
    EXPECT_TRUE(semisimple_nondegenerate(Scalar(3), {Scalar(1)}, 4));
}

TEST(Semisimple, Degenerate) {
    EXPECT_FALSE(semisimple_degenerate({Scalar(0), Scalar(1)}, 3));
    EXPECT_TRUE(semisimple_degenerate({Scalar(0), Scalar(7)}, 3));
    EXPECT_TRUE(semisimple_degenerate({Scalar(42)}, 3));
}

TEST(Semisimple, PredicateMatchesFactorScan) {
    // oracle: multiply every factor together and test for zero
    for (const char* q : {"2", "3", "-1", "-2", "1/2"})
        for (const char* Q2 : {"1", "2", "4", "8", "-1", "1/4"})
            for (int n = 1; n <= 4; ++n) {
                Scalar qq = S(q);
                std::vector<Scalar> Q{Scalar(1), S(Q2)};
                Scalar prod = 1;
                for (int i = 1; i <= n; ++i) prod *= q_int(i, qq);
                for (int d = 1 - n; d <= n - 1; ++d) prod *= power(qq, d) * Q[0] - Q[1];
                EXPECT_EQ(semisimple_nondegenerate(qq, Q, n), prod != 0) << q << " " << Q2 << " " << n;
            }
}

TEST(PrimeParams, Substitution) {
    auto p = prime_params(NonDegenerateParams{Scalar(3), {Scalar(1), Scalar(7)}, 2});
    EXPECT_EQ(p.q, Scalar(1, 3));
    EXPECT_EQ(p.Q, (std::vector<Scalar>{Scalar(7), Scalar(1)}));
    auto pp = prime_params(p);
    EXPECT_EQ(pp.q, Scalar(3));
    EXPECT_EQ(pp.Q, (std::vector<Scalar>{Scalar(1), Scalar(7)}));
    auto d = prime_params_degenerate(DegenerateParams{{Scalar(0), Scalar(9)}, 2});
    EXPECT_EQ(d.u, (std::vector<Scalar>{Scalar(-9), Scalar(0)}));
    EXPECT_EQ(prime_params_degenerate(d).u, (std::vector<Scalar>{Scalar(0), Scalar(9)}));
}

TEST(Params, DefaultsAreValid) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate})
        for (int l = 1; l <= 3; ++l)
            for (int n = 0; n <= 5; ++n) {
                auto p = Params::defaults(v, l, n);
                EXPECT_FALSE(p.violation().has_value()) << p.describe();
                EXPECT_FALSE(p.primed().violation().has_value()) << p.describe();
                // valid at every smaller rank too
                for (int m = 0; m <= n; ++m) EXPECT_FALSE(p.with_n(m).violation().has_value());
                EXPECT_EQ(p.primed().primed(), p);
            }
}

TEST(Params, SeparationRejected) {
    // semisimple at n = 2 but q^1 Q_1 = q^{-1} Q_2 collides
    Params p(NonDegenerateParams{Scalar(3), {Scalar(1), Scalar(9)}, 2});
    EXPECT_TRUE(semisimple_nondegenerate(Scalar(3), {Scalar(1), Scalar(9)}, 2));
    ASSERT_TRUE(p.violation().has_value());
    EXPECT_THROW(p.validate(), ParameterError);
    Params q1(NonDegenerateParams{Scalar(1), {Scalar(1)}, 2});
    EXPECT_THROW(q1.validate(), ParameterError);
}

TEST(ResidueUniverse, Examples) {
    auto p = Params(NonDegenerateParams{Scalar(3), {Scalar(1)}, 2});
    EXPECT_EQ(residue_universe(1, 2, 1, p), (std::vector<Scalar>{Scalar(1)}));
    EXPECT_EQ(residue_universe(1, 2, 2, p), (std::vector<Scalar>{Scalar(1, 3), Scalar(3)}));
    auto p2 = Params::defaults(Variant::nondegenerate, 2, 1);
    auto r = residue_universe(2, 1, 1, p2);
    std::set<Scalar> got(r.begin(), r.end());
    EXPECT_EQ(got, (std::set<Scalar>{p2.nondegenerate().Q[0], p2.nondegenerate().Q[1]}));
}

TEST(ResidueUniverse, SizeMatchesSymbols) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate})
        for (int n = 1; n <= 4; ++n) {
            auto p = Params::defaults(v, 2, n);
            for (int k = 1; k <= n; ++k)
                EXPECT_EQ(residue_universe(2, n, k, p).size(), residue_symbols(2, k).size()) << n << " " << k;
        }
}
