#include <gtest/gtest.h>

#include "hecke/verify.hpp"

using namespace hecke;

namespace {

using MP = Multipartition;

Params nondeg(const Scalar& q, std::vector<Scalar> Q, int n) { return Params(NonDegenerateParams{q, std::move(Q), n}); }

std::string failures(const SuiteReport& s) {
    std::string out;
    for (const auto& r : s.results)
        if (!r.pass) out += r.check + " | " + r.instance + " | " + r.expected + " | " + r.actual + "\n";
    return out;
}

void expect_suite(const std::string& name, const Params& p, VerifyOptions opts = {}) {
    auto report = run_verification(p, {name}, opts);
    ASSERT_EQ(report.suites.size(), 1u);
    const auto& s = report.suites[0];
    EXPECT_TRUE(s.ok()) << name << " at " << p.describe() << "\n" << failures(s);
    if (s.skipped.empty()) EXPECT_GT(s.total(), 0u) << name << " at " << p.describe();
}

}  // namespace

TEST(Expansion, Examples) {
    Representation rep(Params::defaults(Variant::nondegenerate, 2, 3));
    Bases B(rep);
    auto id = expand_in_seminormal(B, rep.identity());
    EXPECT_EQ(id.size(), rep.index().all().size());
    for (const auto& term : id) {
        EXPECT_EQ(term.u, term.v);
        EXPECT_EQ(term.coefficient, 1 / B.gamma().at(term.u));
    }
    auto tabs = rep.index().tableaux(3);
    auto one = expand_in_seminormal(B, B.f(tabs.front(), tabs.back()));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].coefficient, 1);
    for (int k = 1; k <= 3; ++k) {
        auto terms = expand_in_seminormal(B, rep.jm(k));
        for (const auto& term : terms) {
            EXPECT_EQ(term.u, term.v);
            EXPECT_EQ(term.coefficient, rep.params().residue(term.u, k) / B.gamma().at(term.u));
        }
        EXPECT_EQ(synthesize(B, terms), rep.jm(k));
    }
}

TEST(Alpha, FormulaExamples) {
    Scalar q = 3;
    auto p = nondeg(q, {1}, 2);
    auto g = gamma_table(p);
    auto gp = gamma_prime_table(p);
    auto row = initial_tableau(MP::of({{2}}));
    auto col = initial_tableau(MP::of({{1, 1}}));
    auto a = alpha_formula(p, g, gp, row, row);
    EXPECT_EQ(a.first, 1 / (1 + q));
    EXPECT_EQ(a.second, a.first);
    auto b = alpha_formula(p, g, gp, col, col);
    EXPECT_EQ(b.first, 1 + 1 / q);
    EXPECT_EQ(b.second, b.first);

    auto p1 = nondeg(q, {1}, 1);
    auto t = initial_tableau(MP::of({{1}}));
    EXPECT_EQ(alpha_formula(p1, gamma_table(p1), gamma_prime_table(p1), t, t).first, 1);
}

TEST(Beta, RankTwoExample) {
    Scalar q = 3;
    Representation rep(nondeg(q, {1}, 2));
    Bases high(rep);
    Bases low(rep, 1);
    auto s = initial_tableau(MP::of({{1}}));
    auto terms = expand_in_seminormal(high, low.f(s, s));
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_EQ(terms[0].u.shape(), MP::of({{2}}));
    EXPECT_EQ(terms[0].coefficient, 1 / (1 + q));
    EXPECT_EQ(terms[1].u.shape(), MP::of({{1, 1}}));
    EXPECT_EQ(terms[1].coefficient, 1);
}

TEST(Suites, LevelOne) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& name : suite_names()) expect_suite(name, Params::defaults(Variant::nondegenerate, 1, n));
}

TEST(Suites, LevelTwoRankThree) {
    for (auto v : {Variant::nondegenerate, Variant::degenerate})
        for (const auto& name : suite_names()) expect_suite(name, Params::defaults(v, 2, 3));
}

TEST(Suites, LevelThreeRankTwo) {
    for (const auto& name : suite_names()) expect_suite(name, Params::defaults(Variant::nondegenerate, 3, 2));
}

TEST(Suites, OtherParameters) {
    for (const char* base : {"5", "-2", "2/3"})
        for (const char* name : {"alpha", "beta", "duality", "dual-recursion", "restriction-ratio"})
            expect_suite(name, Params::generated(Variant::nondegenerate, 2, 3, parse_scalar(base)));
    for (const char* name : {"alpha", "beta", "duality"})
        expect_suite(name, Params::generated(Variant::degenerate, 2, 3, Scalar(3)));
}

TEST(Suites, TriangularGate) {
    auto p = Params::defaults(Variant::nondegenerate, 2, 4);
    auto report = run_verification(p, {"triangular"});
    ASSERT_EQ(report.suites.size(), 1u);
    EXPECT_FALSE(report.suites[0].skipped.empty());
    EXPECT_EQ(report.suites[0].total(), 0u);
    EXPECT_TRUE(report.suites[0].ok());

    VerifyOptions opts;
    opts.triangular_limit = 1;
    auto small = run_verification(Params::defaults(Variant::nondegenerate, 1, 2), {"triangular"}, opts);
    EXPECT_FALSE(small.suites[0].skipped.empty());
    opts.force_triangular = true;
    expect_suite("triangular", Params::defaults(Variant::nondegenerate, 1, 2), opts);
}

TEST(Suites, NamesAndParsing) {
    auto names = suite_names();
    std::vector<std::string> expected{"alpha", "beta", "duality", "dual-recursion", "products", "relations",
                                      "restriction-ratio", "triangular"};
    ASSERT_GE(names.size(), expected.size());
    EXPECT_TRUE(std::equal(expected.begin(), expected.end(), names.begin()));
    EXPECT_EQ(parse_suite_list("all"), names);
    EXPECT_EQ(parse_suite_list("beta,alpha,beta"), (std::vector<std::string>{"beta", "alpha"}));
    EXPECT_THROW(parse_suite_list("alpha,nope"), std::invalid_argument);
    EXPECT_THROW(run_verification(Params::defaults(Variant::nondegenerate, 1, 2), {"nope"}), std::invalid_argument);
}

TEST(Parallel, OrderAndExceptions) {
    auto f = [](std::size_t i) -> std::vector<CheckResult> {
        if (i == 3) throw std::runtime_error("boom");
        return {bool_check("c", std::to_string(i), true, "", "")};
    };
    auto label = [](std::size_t i) { return std::to_string(i); };
    auto one = parallel_checks(8, 1, f, label);
    auto four = parallel_checks(8, 4, f, label);
    ASSERT_EQ(one.size(), 8u);
    ASSERT_EQ(four.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(one[i].instance, four[i].instance);
        EXPECT_EQ(one[i].pass, i != 3);
    }
    EXPECT_EQ(one[3].actual, "boom");
}

TEST(Determinism, JobsDoNotChangeResults) {
    auto p = Params::defaults(Variant::nondegenerate, 2, 3);
    VerifyOptions a;
    a.jobs = 1;
    VerifyOptions b;
    b.jobs = 3;
    auto r1 = run_verification(p, {"alpha", "products"}, a);
    auto r2 = run_verification(p, {"alpha", "products"}, b);
    ASSERT_EQ(r1.suites.size(), r2.suites.size());
    for (std::size_t i = 0; i < r1.suites.size(); ++i) {
        ASSERT_EQ(r1.suites[i].results.size(), r2.suites[i].results.size());
        for (std::size_t k = 0; k < r1.suites[i].results.size(); ++k) {
            EXPECT_EQ(r1.suites[i].results[k].instance, r2.suites[i].results[k].instance);
            EXPECT_EQ(r1.suites[i].results[k].pass, r2.suites[i].results[k].pass);
        }
    }
}

TEST(Verification, RejectsBadParams) {
    EXPECT_THROW(run_verification(nondeg(2, {1, 2}, 2), {"alpha"}), ParameterError);
}
