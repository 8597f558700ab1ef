#pragma once

// The block-diagonal representation on the sum of all S^lambda, built from the
// known seminormal action of the generators.  Row convention:
// f_s . h = sum_t M(h)_{st} f_t, so M(h1 h2) = M(h1) M(h2).

#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/combinatorics.hpp"
#include "hecke/matrix.hpp"
#include "hecke/params.hpp"
#include "hecke/report.hpp"
#include "hecke/seminormal.hpp"

namespace hecke {

/// Canonical ordering of P_n and of each Std(lambda).
class TableauIndex {
public:
    TableauIndex() = default;
    TableauIndex(int level, int n) : level_(level), n_(n), shapes_(multipartitions(level, n)) {
        for (std::size_t b = 0; b < shapes_.size(); ++b) {
            shape_pos_.emplace(shapes_[b], b);
            tableaux_.push_back(standard_tableaux(shapes_[b]));
            for (std::size_t i = 0; i < tableaux_.back().size(); ++i)
                loc_.emplace(tableaux_.back()[i], std::pair<std::size_t, int>{b, static_cast<int>(i)});
            dims_.push_back(static_cast<int>(tableaux_.back().size()));
        }
    }

    int level() const { return level_; }
    int n() const { return n_; }
    std::size_t num_blocks() const { return shapes_.size(); }
    const std::vector<Multipartition>& shapes() const { return shapes_; }
    const Multipartition& shape(std::size_t b) const { return shapes_.at(b); }
    const std::vector<StandardTableau>& tableaux(std::size_t b) const { return tableaux_.at(b); }
    const std::vector<int>& dims() const { return dims_; }

    std::size_t block_of(const Multipartition& lam) const {
        auto it = shape_pos_.find(lam);
        if (it == shape_pos_.end()) throw std::invalid_argument("shape " + to_string(lam) + " not in P_n");
        return it->second;
    }

    /// (block, index within block).
    std::pair<std::size_t, int> locate(const StandardTableau& t) const {
        auto it = loc_.find(t);
        if (it == loc_.end()) throw std::invalid_argument("tableau " + to_string(t) + " not in this index");
        return it->second;
    }

    /// Every standard tableau, blocks in order.
    std::vector<StandardTableau> all() const {
        std::vector<StandardTableau> out;
        for (const auto& ts : tableaux_) out.insert(out.end(), ts.begin(), ts.end());
        return out;
    }

    /// sum of dim^2.
    std::uint64_t dimension() const {
        std::uint64_t d = 0;
        for (int f : dims_) d += static_cast<std::uint64_t>(f) * static_cast<std::uint64_t>(f);
        return d;
    }

private:
    int level_ = 0;
    int n_ = 0;
    std::vector<Multipartition> shapes_;
    std::map<Multipartition, std::size_t> shape_pos_;
    std::vector<std::vector<StandardTableau>> tableaux_;
    std::map<StandardTableau, std::pair<std::size_t, int>> loc_;
    std::vector<int> dims_;
};

namespace detail {
inline std::uint64_t next_context_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter++;
}
}  // namespace detail

class Representation {
public:
    /// Validates params (semisimplicity and separation) and builds G_i, J_k.
    explicit Representation(Params params)
        : params_(std::move(params)), index_(params_.level(), params_.n()), context_(detail::next_context_id()) {
        params_.validate();
        for (int k = 1; k <= n(); ++k) jm_.push_back(build_jm(k));
        for (int i = 1; i < n(); ++i) gens_.push_back(build_generator(i));
    }

    const Params& params() const { return params_; }
    const TableauIndex& index() const { return index_; }
    int level() const { return params_.level(); }
    int n() const { return params_.n(); }
    bool is_degenerate() const { return params_.is_degenerate(); }
    std::uint64_t context() const { return context_; }

    AlgebraElement zero() const { return AlgebraElement(context_, index_.dims()); }

    AlgebraElement identity() const {
        AlgebraElement e = zero();
        for (std::size_t b = 0; b < e.num_blocks(); ++b) e.block(b) = Block::identity(index_.dims()[b]);
        return e;
    }

    AlgebraElement scalar(const Scalar& c) const { return identity() * c; }

    /// T_i (s_i in the degenerate case) for 1 <= i < n; i = 0 gives T_0 = L_1
    /// (in the degenerate algebra, the generator L_1).
    const AlgebraElement& generator(int i) const {
        if (i == 0) return jm(1);
        if (i < 1 || i >= n()) throw std::out_of_range("generator index out of range");
        return gens_[static_cast<std::size_t>(i - 1)];
    }

    /// L_k, stored as the residue diagonal.
    const AlgebraElement& jm(int k) const {
        if (k < 1 || k > n()) throw std::out_of_range("JM index out of range");
        return jm_[static_cast<std::size_t>(k - 1)];
    }

    /// T_{i_1} ... T_{i_k}.
    AlgebraElement word(const PermWord& w) const {
        AlgebraElement r = identity();
        for (int i : w.letters) r = r * generator(i);
        return r;
    }

    /// Diagonal element with value v(t) at each tableau t.
    template <class F>
    AlgebraElement diagonal(F&& v) const {
        AlgebraElement e = zero();
        for (std::size_t b = 0; b < index_.num_blocks(); ++b) {
            const auto& ts = index_.tableaux(b);
            for (std::size_t a = 0; a < ts.size(); ++a) {
                Scalar x = v(ts[a]);
                if (x != 0) e.block(b).at(static_cast<int>(a), static_cast<int>(a)) = x;
            }
        }
        return e.compact();
    }

    /// Element with a single entry c at (s, t); s and t must share a shape.
    AlgebraElement unit(const StandardTableau& s, const StandardTableau& t, const Scalar& c = 1) const {
        auto [bs, is] = index_.locate(s);
        auto [bt, it] = index_.locate(t);
        if (bs != bt) throw std::invalid_argument("unit: tableaux of different shapes");
        AlgebraElement e = zero();
        if (c != 0) e.block(bs).at(is, it) = c;
        return e;
    }

    /// L_k recomputed from the generators: q^{1-k} T_{k-1}..T_1 T_0 T_1..T_{k-1},
    /// or L_{k} = s_{k-1} L_{k-1} s_{k-1} + s_{k-1} in the degenerate case.
    AlgebraElement jm_from_generators(int k) const {
        if (k < 1 || k > n()) throw std::out_of_range("JM index out of range");
        if (is_degenerate()) {
            AlgebraElement L = jm(1);
            for (int m = 1; m < k; ++m) L = generator(m) * L * generator(m) + generator(m);
            return L;
        }
        AlgebraElement x = generator(0);
        for (int m = 1; m < k; ++m) x = generator(m) * x * generator(m);
        return x * power(params_.hecke_q(), 1 - k);
    }

private:
    AlgebraElement build_jm(int k) const {
        return diagonal([&](const StandardTableau& t) { return params_.residue(t, k); });
    }

    AlgebraElement build_generator(int i) const {
        AlgebraElement g = zero();
        for (std::size_t b = 0; b < index_.num_blocks(); ++b) {
            const auto& ts = index_.tableaux(b);
            auto& M = g.block(b);
            for (std::size_t a = 0; a < ts.size(); ++a) {
                const auto& s = ts[a];
                int row = static_cast<int>(a);
                if (s.same_row(i, i + 1)) {
                    M.at(row, row) = same_row_eigenvalue(params_);
                    continue;
                }
                if (s.same_col(i, i + 1)) {
                    M.at(row, row) = -1;
                    continue;
                }
                auto t = s.swapped(i);
                if (!t) throw std::logic_error("swap of separated entries is not standard");
                int col = index_.locate(*t).second;
                M.at(row, row) = coefficient_A(params_, s, i);
                M.at(row, col) = tableau_strictly_dominates(s, *t) ? Scalar(1) : coefficient_B(params_, s, i);
            }
        }
        return g.compact();
    }

    Params params_;
    TableauIndex index_;
    std::uint64_t context_;
    std::vector<AlgebraElement> jm_;
    std::vector<AlgebraElement> gens_;
};

/// Every defining relation of the presentation, plus the JM word identity.
inline std::vector<CheckResult> check_defining_relations(const Representation& rep) {
    std::vector<CheckResult> out;
    const int n = rep.n();
    const std::string ctx = rep.params().describe();
    auto inst = [&](const std::string& what) { return ctx + " " + what; };
    const auto one = rep.identity();
    const Params& p = rep.params();

    if (n >= 1) {
        AlgebraElement cyc = one;
        for (int c = 1; c <= rep.level(); ++c) cyc = cyc * (rep.jm(1) - rep.scalar(p.cyclotomic(c)));
        out.push_back(zero_check("cyclotomic", inst(rep.is_degenerate() ? "prod (L_1 - u_c)" : "prod (T_0 - Q_c)"), cyc));
    }

    for (int i = 1; i < n; ++i) {
        const auto& g = rep.generator(i);
        std::string name = rep.is_degenerate() ? "s_" + std::to_string(i) : "T_" + std::to_string(i);
        if (rep.is_degenerate())
            out.push_back(element_check("quadratic", inst(name + "^2 = 1"), one, g * g));
        else
            out.push_back(zero_check("quadratic", inst("(" + name + " - q)(" + name + " + 1)"),
                                     (g - rep.scalar(p.hecke_q())) * (g + one)));
    }

    for (int i = 1; i + 1 < n; ++i) {
        const auto& a = rep.generator(i);
        const auto& b = rep.generator(i + 1);
        out.push_back(element_check("braid", inst("i=" + std::to_string(i)), a * b * a, b * a * b));
    }

    // far commutation, including generator 0 (T_0 or L_1) with i >= 2
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            const auto& a = rep.generator(i);
            const auto& b = rep.generator(j);
            out.push_back(element_check("commute", inst("i=" + std::to_string(i) + ",j=" + std::to_string(j)), a * b,
                                        b * a));
        }

    if (!rep.is_degenerate() && n >= 2) {
        const auto& t0 = rep.generator(0);
        const auto& t1 = rep.generator(1);
        out.push_back(element_check("type-B braid", inst("T_0T_1T_0T_1"), t0 * t1 * t0 * t1, t1 * t0 * t1 * t0));
    }

    for (int k = 1; k <= n; ++k)
        for (int m = k + 1; m <= n; ++m)
            out.push_back(element_check("jm-commute", inst("k=" + std::to_string(k) + ",m=" + std::to_string(m)),
                                        rep.jm(k) * rep.jm(m), rep.jm(m) * rep.jm(k)));

    for (int i = 1; i < n; ++i)
        for (int l = 1; l <= n; ++l) {
            if (l == i || l == i + 1) continue;
            out.push_back(element_check("generator-jm-commute",
                                        inst("i=" + std::to_string(i) + ",l=" + std::to_string(l)),
                                        rep.generator(i) * rep.jm(l), rep.jm(l) * rep.generator(i)));
        }

    if (rep.is_degenerate())
        for (int i = 1; i < n; ++i) {
            const auto& s = rep.generator(i);
            out.push_back(element_check("jm-recursion", inst("L_" + std::to_string(i + 1) + " = s L s + s"),
                                        rep.jm(i + 1), s * rep.jm(i) * s + s));
        }

    for (int k = 1; k <= n; ++k)
        out.push_back(element_check("jm-word", inst("L_" + std::to_string(k)), rep.jm(k), rep.jm_from_generators(k)));
    return out;
}

}  // namespace hecke
