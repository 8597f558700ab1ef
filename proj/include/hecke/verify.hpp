#pragma once

// Executable checks for the alpha/a, beta/b and gamma-duality identities and
// the structural laws they rest on.  Every suite is exact.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hecke/bases.hpp"
#include "hecke/combinatorics.hpp"
#include "hecke/matrix.hpp"
#include "hecke/params.hpp"
#include "hecke/report.hpp"
#include "hecke/representation.hpp"

namespace hecke {

struct VerifyOptions {
    unsigned jobs = 1;
    bool force_triangular = false;
    /// The triangular suite is skipped when l^n n! exceeds this, unless forced.
    std::uint64_t triangular_limit = 48;
};

struct VerificationReport {
    Params params;
    std::vector<SuiteReport> suites;
    std::int64_t elapsed_ms = 0;

    bool ok() const {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.ok(); });
    }
};

/// HECKE_JOBS if set and positive, otherwise the hardware concurrency.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("HECKE_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs f(0..count-1) on up to `jobs` threads; results come back in index
/// order.  An exception inside f becomes a failing check for that instance.
inline std::vector<CheckResult> parallel_checks(std::size_t count, unsigned jobs,
                                                const std::function<std::vector<CheckResult>(std::size_t)>& f,
                                                const std::function<std::string(std::size_t)>& label) {
    std::vector<std::vector<CheckResult>> slots(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i] = f(i);
            } catch (const std::exception& e) {
                slots[i] = {bool_check("exception", label(i), false, "no exception", e.what())};
            }
        }
    };
    unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<CheckResult> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------------------
// Closed formulas

struct AlphaValues {
    Scalar first;
    Scalar second;
};

/// Both printed expressions for alpha_st (a_st in the degenerate case):
///   w^{-l(d(s'))-l(d(t'))} gamma_{t_lambda} gamma'_{t^{lambda'}} / (gamma_s gamma_t)
///   w^{ l(d(s'))+l(d(t'))} gamma'_{s'} gamma'_{t'} / (gamma_{t_lambda} gamma'_{t^{lambda'}})
/// with w = -q (or -1).
inline AlphaValues alpha_formula(const Params& p, const CoefficientTable& gamma, const CoefficientTable& gamma_prime,
                                 const StandardTableau& s, const StandardTableau& t) {
    const auto& lam = s.shape();
    auto t_low = column_initial_tableau(lam);
    auto t_top_conj = initial_tableau(lam.conjugate());
    int len = d_word(s.conjugate()).length() + d_word(t.conjugate()).length();
    Scalar w = p.sign_base();
    Scalar core = gamma.at(t_low) * gamma_prime.at(t_top_conj);
    AlphaValues v;
    v.first = power(w, -len) * core / (gamma.at(s) * gamma.at(t));
    v.second = power(w, len) * gamma_prime.at(s.conjugate()) * gamma_prime.at(t.conjugate()) / core;
    return v;
}

// ---------------------------------------------------------------------------
// Expansion in the seminormal basis

struct ExpansionTerm {
    StandardTableau u;
    StandardTableau v;
    Scalar coefficient;
};

/// X = sum coeff_uv f_uv, read off through F_u X F_v = coeff_uv f_uv.
/// Only nonzero terms are returned, in canonical order.
inline std::vector<ExpansionTerm> expand_in_seminormal(const Bases& bases, const AlgebraElement& x) {
    if (bases.rank() != bases.rep().n()) throw std::invalid_argument("expand_in_seminormal needs full-rank bases");
    std::vector<ExpansionTerm> out;
    const auto& idx = bases.index();
    for (std::size_t b = 0; b < idx.num_blocks(); ++b) {
        if (x.block(b).is_zero()) continue;
        const auto& ts = idx.tableaux(b);
        for (const auto& u : ts)
            for (const auto& v : ts) {
                AlgebraElement y = bases.F(u) * x * bases.F(v);
                if (y.is_zero()) continue;
                auto c = y.ratio_to(bases.f(u, v));
                if (!c) throw std::logic_error("F_u X F_v is not a multiple of f_uv");
                out.push_back({u, v, *c});
            }
    }
    return out;
}

inline AlgebraElement synthesize(const Bases& bases, const std::vector<ExpansionTerm>& terms) {
    AlgebraElement x = bases.rep().zero();
    for (const auto& term : terms) x += bases.f(term.u, term.v) * term.coefficient;
    return x.compact();
}

// ---------------------------------------------------------------------------
// Suites

struct VerifyContext {
    const Representation& rep;
    const Bases& bases;
    VerifyOptions options;

    const Params& params() const { return rep.params(); }
    std::string prefix() const { return params().describe(); }
};

namespace detail {

using Pair = std::pair<StandardTableau, StandardTableau>;

inline std::vector<Pair> all_pairs(const TableauIndex& idx) {
    std::vector<Pair> out;
    for (std::size_t b = 0; b < idx.num_blocks(); ++b)
        for (const auto& s : idx.tableaux(b))
            for (const auto& t : idx.tableaux(b)) out.emplace_back(s, t);
    return out;
}

inline std::string pair_label(const std::string& prefix, const StandardTableau& s, const StandardTableau& t) {
    return prefix + " lambda=" + to_string(s.shape()) + " s=" + to_string(s) + " t=" + to_string(t);
}

inline std::string tableau_label(const std::string& prefix, const StandardTableau& t) {
    return prefix + " lambda=" + to_string(t.shape()) + " t=" + to_string(t);
}

/// Aggregates many element comparisons into one check with the first witness.
class Aggregate {
public:
    Aggregate(std::string check, std::string instance) : check_(std::move(check)), instance_(std::move(instance)) {}

    void compare(const std::string& what, const AlgebraElement& expected, const AlgebraElement& actual) {
        ++count_;
        if (!first_fail_.empty()) return;
        auto diff = element_difference(expected, actual);
        if (!diff.empty()) first_fail_ = what + ": " + diff;
    }

    CheckResult result() const {
        if (first_fail_.empty())
            return bool_check(check_, instance_, true, std::to_string(count_) + " identities", "all equal");
        return bool_check(check_, instance_, false, "all identities hold", first_fail_);
    }

private:
    std::string check_;
    std::string instance_;
    std::size_t count_ = 0;
    std::string first_fail_;
};

inline AlgebraElement pseudo_random_element(const Representation& rep, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> gen(0, std::max(0, rep.n() - 1));
    std::uniform_int_distribution<int> len(0, 3);
    AlgebraElement x = rep.scalar(coef(rng));
    for (int term = 0; term < 3; ++term) {
        AlgebraElement w = rep.identity();
        int l = len(rng);
        for (int k = 0; k < l && rep.n() > 0; ++k) w = w * rep.generator(gen(rng));
        x += w * Scalar(coef(rng));
    }
    return x;
}

}  // namespace detail

inline SuiteReport suite_relations(const VerifyContext& ctx) {
    return {"relations", check_defining_relations(ctx.rep)};
}

/// g_st = alpha_st f_st for both closed expressions, alpha^2, symmetry and the
/// g_{t't'} identity.
inline SuiteReport suite_alpha(const VerifyContext& ctx) {
    const auto& B = ctx.bases;
    const auto& p = ctx.params();
    auto pairs = detail::all_pairs(B.index());
    auto tabs = B.index().all();
    std::string pre = ctx.prefix();
    auto label = [&](std::size_t i) {
        if (i < pairs.size()) return detail::pair_label(pre, pairs[i].first, pairs[i].second);
        return detail::tableau_label(pre, tabs[i - pairs.size()]);
    };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        std::vector<CheckResult> out;
        std::string inst = label(i);
        if (i >= pairs.size()) {
            const auto& t = tabs[i - pairs.size()];
            auto tc = t.conjugate();
            Scalar c = B.gamma_prime().at(t) / B.gamma().at(tc);
            out.push_back(element_check("g_t't' = gamma'_t/gamma_t' f_t't'", inst, B.f(tc, tc) * c, B.g(tc, tc)));
            return out;
        }
        const auto& [s, t] = pairs[i];
        auto a = alpha_formula(p, B.gamma(), B.gamma_prime(), s, t);
        const auto& f = B.f(s, t);
        const auto& g = B.g(s, t);
        out.push_back(element_check("g = alpha f (first expression)", inst, f * a.first, g));
        out.push_back(element_check("g = alpha f (second expression)", inst, f * a.second, g));
        out.push_back(scalar_check("alpha expressions agree", inst, a.first, a.second));
        Scalar sq = B.gamma_prime().at(s.conjugate()) * B.gamma_prime().at(t.conjugate()) /
                    (B.gamma().at(s) * B.gamma().at(t));
        out.push_back(scalar_check("alpha^2", inst, sq, a.first * a.first));
        auto st = g.ratio_to(f);
        auto ts = B.g(t, s).ratio_to(B.f(t, s));
        bool sym = st && ts && *st == *ts;
        out.push_back(bool_check("alpha symmetric", inst, sym, st ? to_string(*st) : "no ratio",
                                 ts ? to_string(*ts) : "no ratio"));
        return out;
    };
    return {"alpha", parallel_checks(pairs.size() + tabs.size(), ctx.options.jobs, run, label)};
}

/// f^{(n-1)}_st expanded in the f^{(n)} basis: support, value, re-synthesis, trace.
inline SuiteReport suite_beta(const VerifyContext& ctx) {
    SuiteReport report{"beta", {}};
    const auto& rep = ctx.rep;
    if (rep.n() < 1) return report;
    std::string pre = ctx.prefix();
    auto low_params = rep.params().with_n(rep.n() - 1);
    if (auto v = low_params.violation()) {
        report.results.push_back(bool_check("rank n-1 parameters valid", pre, false, "valid", *v));
        return report;
    }
    Bases low(rep, rep.n() - 1);
    const auto& high = ctx.bases;
    auto pairs = detail::all_pairs(low.index());
    auto label = [&](std::size_t i) { return detail::pair_label(pre, pairs[i].first, pairs[i].second); };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        const auto& [s, t] = pairs[i];
        std::string inst = label(i);
        std::vector<CheckResult> out;
        const auto& x = low.f(s, t);
        auto terms = expand_in_seminormal(high, x);

        std::set<detail::Pair> expected_support;
        for (const auto& node : s.shape().addable_nodes())
            expected_support.insert({s.extended(node), t.extended(node)});
        std::set<detail::Pair> support;
        for (const auto& term : terms) support.insert({term.u, term.v});
        std::string missing, extra;
        for (const auto& e : expected_support)
            if (!support.count(e)) missing += (missing.empty() ? "" : ",") + to_string(e.first) + "/" + to_string(e.second);
        for (const auto& e : support)
            if (!expected_support.count(e)) extra += (extra.empty() ? "" : ",") + to_string(e.first) + "/" + to_string(e.second);
        out.push_back(bool_check("support", inst, missing.empty() && extra.empty(),
                                 std::to_string(expected_support.size()) + " pairs u|=s, v|=t",
                                 missing.empty() && extra.empty() ? "same" : "missing {" + missing + "} extra {" + extra + "}"));

        for (const auto& term : terms) {
            std::string ti = inst + " u=" + to_string(term.u) + " v=" + to_string(term.v);
            out.push_back(scalar_check("beta = gamma_s/gamma_u", ti, low.gamma().at(s) / high.gamma().at(term.u),
                                       term.coefficient));
            out.push_back(scalar_check("beta = gamma_t/gamma_v", ti, low.gamma().at(t) / high.gamma().at(term.v),
                                       term.coefficient));
        }
        out.push_back(element_check("re-synthesis", inst, x, synthesize(high, terms)));
        if (s == t) {
            // each diagonal term carries beta_uu gamma_u = gamma_s, so the sum
            // counts the extensions of s
            Scalar trace = 0;
            for (const auto& term : terms)
                if (term.u == term.v) trace += term.coefficient * high.gamma().at(term.u);
            Scalar count = static_cast<long>(s.shape().addable_nodes().size());
            out.push_back(scalar_check("trace", inst, count * low.gamma().at(s), trace));
        }
        return out;
    };
    report.results = parallel_checks(pairs.size(), ctx.options.jobs, run, label);
    return report;
}

/// gamma_{t'} gamma'_t = q^{-2 l(d(t))} gamma_{t_{lambda'}} gamma'_{t^lambda}.
inline SuiteReport suite_duality(const VerifyContext& ctx) {
    const auto& B = ctx.bases;
    auto tabs = B.index().all();
    std::string pre = ctx.prefix();
    auto label = [&](std::size_t i) { return detail::tableau_label(pre, tabs[i]); };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        const auto& t = tabs[i];
        const auto& lam = t.shape();
        Scalar lhs = B.gamma().at(t.conjugate()) * B.gamma_prime().at(t);
        Scalar rhs = power(ctx.params().hecke_q(), -2 * d_word(t).length()) *
                     B.gamma().at(column_initial_tableau(lam.conjugate())) * B.gamma_prime().at(initial_tableau(lam));
        return {scalar_check("gamma duality", label(i), rhs, lhs)};
    };
    return {"duality", parallel_checks(tabs.size(), ctx.options.jobs, run, label)};
}

/// Closed base value of gamma' at t^{lambda'} and the primed ratio law.
inline SuiteReport suite_dual_recursion(const VerifyContext& ctx) {
    const auto& B = ctx.bases;
    const auto& p = ctx.params();
    const auto& shapes = B.index().shapes();
    std::string pre = ctx.prefix();
    auto label = [&](std::size_t i) { return pre + " lambda=" + to_string(shapes[i]); };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        const auto& lam = shapes[i];
        std::string inst = label(i);
        std::vector<CheckResult> out;
        auto top = initial_tableau(lam.conjugate());
        auto low_conj = column_initial_tableau(lam).conjugate();
        out.push_back(bool_check("(t_lambda)' = t^{lambda'}", inst, low_conj == top, to_string(top), to_string(low_conj)));
        out.push_back(scalar_check("base value", inst, dual_gamma_base_formula(p, lam), B.gamma_prime().at(top)));
        Scalar q2 = power(p.hecke_q(), -2);
        for (const auto& t : B.index().tableaux(B.index().block_of(lam)))
            for (int k = 1; k < t.size(); ++k) {
                auto s = t.swapped(k);
                if (!s || !tableau_strictly_dominates(t, *s)) continue;
                std::string pi = inst + " t=" + to_string(t) + " i=" + std::to_string(k);
                Scalar lhs = B.gamma_prime().at(t.conjugate()) / B.gamma_prime().at(s->conjugate());
                out.push_back(scalar_check("ratio law", pi, q2 * B.gamma().at(*s) / B.gamma().at(t), lhs));
                Scalar closed = q2 * gamma_step_ratio(p, p.residue(t, k), p.residue(*s, k));
                out.push_back(scalar_check("ratio closed form", pi, closed, lhs));
            }
        return out;
    };
    return {"dual-recursion", parallel_checks(shapes.size(), ctx.options.jobs, run, label)};
}

/// gamma^{(n-1)}_s / gamma^{(n)}_{s+x} is independent of s for each added node x.
inline SuiteReport suite_restriction_ratio(const VerifyContext& ctx) {
    SuiteReport report{"restriction-ratio", {}};
    const auto& rep = ctx.rep;
    if (rep.n() < 1) return report;
    std::string pre = ctx.prefix();
    auto low_params = rep.params().with_n(rep.n() - 1);
    if (auto v = low_params.violation()) {
        report.results.push_back(bool_check("rank n-1 parameters valid", pre, false, "valid", *v));
        return report;
    }
    auto low = gamma_table(low_params);
    const auto& high = ctx.bases.gamma();
    for (const auto& mu : multipartitions(rep.level(), rep.n() - 1)) {
        auto top = initial_tableau(mu);
        for (const auto& x : mu.addable_nodes()) {
            Scalar ref = low.at(top) / high.at(top.extended(x));
            for (const auto& s : standard_tableaux(mu))
                report.results.push_back(scalar_check("ratio constant", pre + " mu=" + to_string(mu) + " node=" +
                                                                            to_string(x) + " s=" + to_string(s),
                                                      ref, low.at(s) / high.at(s.extended(x))));
        }
    }
    return report;
}

/// f and g product rules, F_t orthogonality, F_t = f_tt/gamma_t = g_tt/gamma'_{t'}, sum F_t = 1.
inline SuiteReport suite_products(const VerifyContext& ctx) {
    const auto& B = ctx.bases;
    const auto& rep = ctx.rep;
    auto pairs = detail::all_pairs(B.index());
    auto tabs = B.index().all();
    std::string pre = ctx.prefix();
    auto label = [&](std::size_t i) {
        if (i < pairs.size()) return detail::pair_label(pre, pairs[i].first, pairs[i].second);
        return detail::tableau_label(pre, tabs[i - pairs.size()]);
    };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        std::string inst = label(i);
        if (i >= pairs.size()) {
            const auto& t = tabs[i - pairs.size()];
            detail::Aggregate agg("F_t F_u = delta F_t", inst);
            for (const auto& u : tabs) agg.compare("u=" + to_string(u), t == u ? B.F(t) : rep.zero(), B.F(t) * B.F(u));
            return {agg.result(),
                    element_check("F_t = f_tt / gamma_t", inst, B.F(t), B.f(t, t) * (1 / B.gamma().at(t))),
                    element_check("F_t = g_tt / gamma'_t'", inst, B.F(t),
                                  B.g(t, t) * (1 / B.gamma_prime().at(t.conjugate())))};
        }
        const auto& [s, t] = pairs[i];
        detail::Aggregate fa("f_st f_uv = delta_tu gamma_t f_sv", inst);
        detail::Aggregate ga("g_st g_uv = delta_tu gamma'_t' g_sv", inst);
        for (const auto& [u, v] : pairs) {
            std::string what = "u=" + to_string(u) + " v=" + to_string(v);
            if (t == u) {
                fa.compare(what, B.f(s, v) * B.gamma().at(t), B.f(s, t) * B.f(u, v));
                ga.compare(what, B.g(s, v) * B.gamma_prime().at(t.conjugate()), B.g(s, t) * B.g(u, v));
            } else {
                fa.compare(what, rep.zero(), B.f(s, t) * B.f(u, v));
                ga.compare(what, rep.zero(), B.g(s, t) * B.g(u, v));
            }
        }
        return {fa.result(), ga.result()};
    };
    SuiteReport report{"products", parallel_checks(pairs.size() + tabs.size(), ctx.options.jobs, run, label)};
    AlgebraElement sum = rep.zero();
    for (const auto& t : tabs) sum += B.F(t);
    report.results.push_back(element_check("sum F_t = 1", pre, rep.identity(), sum.compact()));
    return report;
}

/// L_k f_st = res_s(k) f_st and f_st L_k = res_t(k) f_st; same for g.
inline SuiteReport suite_eigen(const VerifyContext& ctx) {
    const auto& B = ctx.bases;
    const auto& rep = ctx.rep;
    const auto& p = ctx.params();
    auto pairs = detail::all_pairs(B.index());
    std::string pre = ctx.prefix();
    auto label = [&](std::size_t i) { return detail::pair_label(pre, pairs[i].first, pairs[i].second); };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        const auto& [s, t] = pairs[i];
        std::string inst = label(i);
        detail::Aggregate left("L_k x_st = res_s(k) x_st", inst);
        detail::Aggregate right("x_st L_k = res_t(k) x_st", inst);
        for (int k = 1; k <= rep.n(); ++k) {
            std::string kk = "k=" + std::to_string(k);
            for (const auto* x : {&B.f(s, t), &B.g(s, t)}) {
                std::string what = (x == &B.f(s, t) ? "f " : "g ") + kk;
                left.compare(what, *x * p.residue(s, k), rep.jm(k) * *x);
                right.compare(what, *x * p.residue(t, k), *x * rep.jm(k));
            }
        }
        return {left.result(), right.result()};
    };
    return {"eigen", parallel_checks(pairs.size(), ctx.options.jobs, run, label)};
}

/// Phi_t invertible and f_st = Phi_s^* f_{t^lambda t^lambda} Phi_t.
inline SuiteReport suite_phi(const VerifyContext& ctx) {
    const auto& B = ctx.bases;
    auto pairs = detail::all_pairs(B.index());
    auto tabs = B.index().all();
    std::string pre = ctx.prefix();
    auto label = [&](std::size_t i) {
        if (i < pairs.size()) return detail::pair_label(pre, pairs[i].first, pairs[i].second);
        return detail::tableau_label(pre, tabs[i - pairs.size()]);
    };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        std::string inst = label(i);
        if (i >= pairs.size()) {
            const auto& t = tabs[i - pairs.size()];
            const auto& phi = B.phi(t);
            std::string bad;
            for (std::size_t b = 0; b < phi.num_blocks() && bad.empty(); ++b)
                if (determinant(phi.block(b)) == 0) bad = "singular block " + std::to_string(b);
            std::vector<CheckResult> out{bool_check("Phi_t invertible", inst, bad.empty(), "all blocks nonsingular",
                                                    bad.empty() ? "all blocks nonsingular" : bad)};
            if (t == initial_tableau(t.shape()))
                out.push_back(element_check("Phi_{t^lambda} = 1", inst, ctx.rep.identity(), phi));
            return out;
        }
        const auto& [s, t] = pairs[i];
        auto top = initial_tableau(s.shape());
        return {element_check("f_st = Phi_s^* f_top Phi_t", inst, B.f(s, t), B.phi_star(s) * B.f(top, top) * B.phi(t))};
    };
    return {"phi", parallel_checks(pairs.size() + tabs.size(), ctx.options.jobs, run, label)};
}

/// Recursion tables against the matrix-extracted values, chain independence
/// and B_i(s) = gamma_s / gamma_t.
inline SuiteReport suite_oracle(const VerifyContext& ctx) {
    const auto& B = ctx.bases;
    const auto& p = ctx.params();
    auto tabs = B.index().all();
    std::string pre = ctx.prefix();
    auto label = [&](std::size_t i) { return detail::tableau_label(pre, tabs[i]); };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        const auto& t = tabs[i];
        std::string inst = label(i);
        std::vector<CheckResult> out;
        const auto& f = B.f(t, t);
        auto fr = (f * f).ratio_to(f);
        out.push_back(bool_check("f_tt^2 = gamma_t f_tt", inst, fr && *fr == B.gamma().at(t), to_string(B.gamma().at(t)),
                                 fr ? to_string(*fr) : "not a multiple"));
        const auto& g = B.g(t, t);
        auto gr = (g * g).ratio_to(g);
        const auto& gp = B.gamma_prime().at(t.conjugate());
        out.push_back(bool_check("g_tt^2 = gamma'_t' g_tt", inst, gr && *gr == gp, to_string(gp),
                                 gr ? to_string(*gr) : "not a multiple"));
        auto alt = reduced_word_between(initial_tableau(t.shape()), t, WordOrder::smallest_first);
        out.push_back(scalar_check("gamma chain independence", inst, B.gamma().at(t),
                                   gamma_along_word(p, t.shape(), alt)));
        out.push_back(scalar_check("gamma' chain independence", inst, B.gamma_prime().at(t),
                                   gamma_along_word(p.primed(), t.shape(), alt)));
        for (int k = 1; k < t.size(); ++k) {
            auto u = t.swapped(k);
            if (!u || !tableau_strictly_dominates(*u, t)) continue;
            out.push_back(scalar_check("B_i(s) = gamma_s/gamma_t", inst + " i=" + std::to_string(k),
                                       B.gamma().at(t) / B.gamma().at(*u), coefficient_B(p, t, k)));
        }
        return out;
    };
    return {"oracle", parallel_checks(tabs.size(), ctx.options.jobs, run, label)};
}

/// star fixes the generators, reverses products, and swaps m_st, n_st, f_st.
inline SuiteReport suite_star(const VerifyContext& ctx) {
    const auto& B = ctx.bases;
    const auto& rep = ctx.rep;
    const auto& gamma = B.gamma();
    std::string pre = ctx.prefix();
    SuiteReport report{"star", {}};
    for (int i = 0; i < rep.n(); ++i)
        report.results.push_back(element_check("star fixes generator", pre + " i=" + std::to_string(i),
                                               rep.generator(i), star(rep, rep.generator(i), gamma)));
    std::mt19937 rng(20240607u);
    for (int trial = 0; trial < 5; ++trial) {
        auto x = detail::pseudo_random_element(rep, rng);
        auto y = detail::pseudo_random_element(rep, rng);
        report.results.push_back(element_check("star anti-multiplicative", pre + " trial=" + std::to_string(trial),
                                               star(rep, y, gamma) * star(rep, x, gamma), star(rep, x * y, gamma)));
        report.results.push_back(element_check("star involution", pre + " trial=" + std::to_string(trial), x,
                                               star(rep, star(rep, x, gamma), gamma)));
    }
    auto pairs = detail::all_pairs(B.index());
    auto label = [&](std::size_t i) { return detail::pair_label(pre, pairs[i].first, pairs[i].second); };
    auto run = [&](std::size_t i) -> std::vector<CheckResult> {
        const auto& [s, t] = pairs[i];
        std::string inst = label(i);
        return {element_check("star m_st = m_ts", inst, B.m(t, s), star(rep, B.m(s, t), gamma)),
                element_check("star n_st = n_ts", inst, B.n(t, s), star(rep, B.n(s, t), gamma)),
                element_check("star f_st = f_ts", inst, B.f(t, s), star(rep, B.f(s, t), gamma))};
    };
    auto rest = parallel_checks(pairs.size(), ctx.options.jobs, run, label);
    report.results.insert(report.results.end(), rest.begin(), rest.end());
    return report;
}

namespace detail {

/// Solves c B = v for many v, where the rows of B are the vectorised basis.
class RowSolver {
public:
    explicit RowSolver(std::vector<std::vector<Scalar>> rows) : n_(rows.size()) {
        // Gauss-Jordan on [B | I]
        inv_.assign(n_, std::vector<Scalar>(n_, Scalar(0)));
        for (std::size_t i = 0; i < n_; ++i) inv_[i][i] = 1;
        auto& a = rows;
        for (std::size_t c = 0; c < n_; ++c) {
            std::size_t piv = c;
            while (piv < n_ && sgn(a[piv][c]) == 0) ++piv;
            if (piv == n_) throw std::runtime_error("basis matrix is singular");
            std::swap(a[piv], a[c]);
            std::swap(inv_[piv], inv_[c]);
            Scalar d = 1 / a[c][c];
            for (auto& x : a[c]) x *= d;
            for (auto& x : inv_[c]) x *= d;
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == c || sgn(a[r][c]) == 0) continue;
                Scalar f = a[r][c];
                for (std::size_t j = 0; j < n_; ++j) {
                    if (sgn(a[c][j]) != 0) a[r][j] -= f * a[c][j];
                    if (sgn(inv_[c][j]) != 0) inv_[r][j] -= f * inv_[c][j];
                }
            }
        }
    }

    /// c = v B^{-1}.
    std::vector<Scalar> solve(const std::vector<Scalar>& v) const {
        std::vector<Scalar> c(n_, Scalar(0));
        for (std::size_t k = 0; k < n_; ++k) {
            if (sgn(v[k]) == 0) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(inv_[k][j]) != 0) c[j] += v[k] * inv_[k][j];
        }
        return c;
    }

private:
    std::size_t n_;
    std::vector<std::vector<Scalar>> inv_;
};

inline std::vector<Scalar> vectorise(const AlgebraElement& x) {
    std::vector<Scalar> v;
    for (std::size_t b = 0; b < x.num_blocks(); ++b) {
        const auto& m = x.block(b);
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j) v.push_back(m(i, j));
    }
    return v;
}

}  // namespace detail

/// m_st L_k in the m-basis: coefficient res_t(k) at (s,t), other support at
/// (s,v) with v dominating t, or in shapes strictly dominating lambda.  The
/// n-basis mirrors this with dominance reversed.
inline SuiteReport suite_triangular(const VerifyContext& ctx) {
    SuiteReport report{"triangular", {}};
    const auto& B = ctx.bases;
    const auto& rep = ctx.rep;
    const auto& p = ctx.params();
    std::uint64_t dim = B.index().dimension();
    if (dim > ctx.options.triangular_limit && !ctx.options.force_triangular) {
        report.skipped = "basis dimension " + std::to_string(dim) + " exceeds the triangular limit " +
                         std::to_string(ctx.options.triangular_limit);
        return report;
    }
    auto pairs = detail::all_pairs(B.index());
    std::string pre = ctx.prefix();
    for (bool dual : {false, true}) {
        std::vector<AlgebraElement> basis;
        std::vector<std::vector<Scalar>> rows;
        for (const auto& [s, t] : pairs) {
            basis.push_back(dual ? B.n(s, t) : B.m(s, t));
            rows.push_back(detail::vectorise(basis.back()));
        }
        detail::RowSolver solver(rows);
        std::string kind = dual ? "n" : "m";
        auto label = [&](std::size_t i) {
            return detail::pair_label(pre + " basis=" + kind, pairs[i].first, pairs[i].second);
        };
        auto run = [&](std::size_t i) -> std::vector<CheckResult> {
            const auto& [s, t] = pairs[i];
            std::vector<CheckResult> out;
            for (int k = 1; k <= rep.n(); ++k) {
                std::string inst = label(i) + " k=" + std::to_string(k);
                auto c = solver.solve(detail::vectorise(basis[i] * rep.jm(k)));
                Scalar lead = 0;
                std::string bad;
                for (std::size_t j = 0; j < pairs.size(); ++j) {
                    if (sgn(c[j]) == 0) continue;
                    const auto& [x, y] = pairs[j];
                    if (x.shape() == s.shape()) {
                        if (x == s && y == t) {
                            lead = c[j];
                            continue;
                        }
                        bool ok = x == s && (dual ? tableau_dominates(t, y) : tableau_dominates(y, t));
                        if (!ok && bad.empty()) bad = "coefficient at (" + to_string(x) + "," + to_string(y) + ")";
                    } else {
                        bool ok = dual ? dominates(s.shape(), x.shape()) : dominates(x.shape(), s.shape());
                        if (!ok && bad.empty()) bad = "coefficient in shape " + to_string(x.shape());
                    }
                }
                out.push_back(scalar_check("leading coefficient res_t(k)", inst, p.residue(t, k), lead));
                out.push_back(bool_check("triangular support", inst, bad.empty(),
                                         dual ? "support below t and below lambda" : "support above t and above lambda",
                                         bad.empty() ? "as expected" : bad));
            }
            return out;
        };
        auto part = parallel_checks(pairs.size(), ctx.options.jobs, run, label);
        report.results.insert(report.results.end(), part.begin(), part.end());
    }
    return report;
}

// ---------------------------------------------------------------------------
// Driver

using SuiteFn = SuiteReport (*)(const VerifyContext&);

struct SuiteEntry {
    const char* name;
    SuiteFn run;
};

/// All suites in canonical order.  The first eight are the main identity suites.
inline const std::vector<SuiteEntry>& suite_registry() {
    static const std::vector<SuiteEntry> entries{
        {"alpha", suite_alpha},
        {"beta", suite_beta},
        {"duality", suite_duality},
        {"dual-recursion", suite_dual_recursion},
        {"products", suite_products},
        {"relations", suite_relations},
        {"restriction-ratio", suite_restriction_ratio},
        {"triangular", suite_triangular},
        {"eigen", suite_eigen},
        {"phi", suite_phi},
        {"oracle", suite_oracle},
        {"star", suite_star},
    };
    return entries;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& e : suite_registry()) out.push_back(e.name);
    return out;
}

/// Parses "a,b,c"; "all" expands to every suite.  Unknown names throw.
inline std::vector<std::string> parse_suite_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto name = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (name == "all") {
            for (const auto& s : suite_names())
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        } else {
            auto names = suite_names();
            if (std::find(names.begin(), names.end(), name) == names.end())
                throw std::invalid_argument("unknown suite '" + name + "'");
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline SuiteReport run_suite(const std::string& name, const VerifyContext& ctx) {
    for (const auto& e : suite_registry())
        if (name == e.name) return e.run(ctx);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

/// Validates params, builds the representation and bases once, runs the suites.
inline VerificationReport run_verification(const Params& params, const std::vector<std::string>& suites,
                                           const VerifyOptions& options = {}) {
    auto start = std::chrono::steady_clock::now();
    params.validate();
    for (const auto& s : suites) (void)parse_suite_list(s);
    Representation rep(params);
    Bases bases(rep);
    VerifyContext ctx{rep, bases, options};
    VerificationReport report{params, {}, 0};
    for (const auto& s : suites) report.suites.push_back(run_suite(s, ctx));
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace hecke
