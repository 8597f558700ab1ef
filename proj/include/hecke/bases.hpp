#pragma once

// Cellular, dual cellular and seminormal elements built as matrix products in
// a Representation, together with the gamma / gamma' (r / r') tables.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/combinatorics.hpp"
#include "hecke/matrix.hpp"
#include "hecke/params.hpp"
#include "hecke/representation.hpp"
#include "hecke/seminormal.hpp"

namespace hecke {

enum class TableKind { gamma, gamma_prime, r, r_prime };

inline std::string to_string(TableKind k) {
    switch (k) {
        case TableKind::gamma: return "gamma";
        case TableKind::gamma_prime: return "gamma_prime";
        case TableKind::r: return "r";
        case TableKind::r_prime: return "r_prime";
    }
    return "?";
}

/// Scalars indexed by every standard tableau of every multipartition of n.
class CoefficientTable {
public:
    CoefficientTable() = default;
    CoefficientTable(TableKind kind, int level, int n) : kind_(kind), level_(level), n_(n) {}

    TableKind kind() const { return kind_; }
    int level() const { return level_; }
    int n() const { return n_; }

    void set(const StandardTableau& t, Scalar v) {
        auto [it, fresh] = values_.emplace(t, v);
        if (!fresh) it->second = std::move(v);
        else order_.push_back(t);
    }

    const Scalar& at(const StandardTableau& t) const {
        auto it = values_.find(t);
        if (it == values_.end()) throw std::out_of_range(to_string(kind_) + " table has no entry for " + to_string(t));
        return it->second;
    }

    bool contains(const StandardTableau& t) const { return values_.count(t) != 0; }

    /// Tableaux in insertion (canonical) order.
    const std::vector<StandardTableau>& tableaux() const { return order_; }
    std::size_t size() const { return order_.size(); }

private:
    TableKind kind_ = TableKind::gamma;
    int level_ = 0;
    int n_ = 0;
    std::map<StandardTableau, Scalar> values_;
    std::vector<StandardTableau> order_;
};

/// gamma_{t^lambda} = [lambda]!_q prod_{s<t} prod_{(i,j) in lambda^(s)} (q^{j-i}Q_s - Q_t),
/// or the row-factorial / content analogue.  The inner product runs over every
/// node of lambda^(s).
inline Scalar gamma_base_value(const Params& p, const Multipartition& lam) {
    Scalar v = mp_q_factorial(lam, p.hecke_q());
    for (const auto& x : lam.nodes())
        for (int t = x.comp + 1; t <= lam.level(); ++t) v *= p.residue(x) - p.cyclotomic(t);
    return v;
}

/// Value at the end of the chain t^lambda = t_0, t_1, ..., t_k = t.s_{i_1}..s_{i_k},
/// each step strictly decreasing in dominance.
inline Scalar gamma_along_word(const Params& p, const Multipartition& lam, const PermWord& w) {
    auto chain = word_chain(initial_tableau(lam), w);
    Scalar v = gamma_base_value(p, lam);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const auto& upper = chain[k - 1];
        const auto& lower = chain[k];
        if (!tableau_strictly_dominates(upper, lower))
            throw std::logic_error("gamma chain step is not dominance decreasing at " + to_string(lower));
        int i = w.letters[k - 1];
        v *= gamma_step_ratio(p, p.residue(upper, i), p.residue(lower, i));
    }
    return v;
}

/// gamma (or r in the degenerate case) for all tableaux of rank p.n().
inline CoefficientTable gamma_table(const Params& p) {
    p.validate();
    CoefficientTable table(p.is_degenerate() ? TableKind::r : TableKind::gamma, p.level(), p.n());
    for (const auto& lam : multipartitions(p.level(), p.n()))
        for (const auto& t : standard_tableaux(lam)) table.set(t, gamma_along_word(p, lam, d_word(t)));
    return table;
}

/// gamma' (r'): the same recursion at the primed parameters, same tableaux.
inline CoefficientTable gamma_prime_table(const Params& p) {
    auto base = gamma_table(p.primed());
    CoefficientTable table(p.is_degenerate() ? TableKind::r_prime : TableKind::gamma_prime, p.level(), p.n());
    for (const auto& t : base.tableaux()) table.set(t, base.at(t));
    return table;
}

/// Closed form for gamma'_{t^{lambda'}} (resp. r'_{t^{lambda'}}):
/// q^C [lambda']!_q prod_{t<s} prod_{(i,j) in lambda^(s)} (q^{j-i}Q_s - Q_t), or
/// (-1)^C (row factorials of lambda') prod_{t<s} prod (j-i+u_s-u_t).
inline Scalar dual_gamma_base_formula(const Params& p, const Multipartition& lam) {
    Scalar v;
    if (p.is_degenerate()) {
        v = (dual_base_exponent_degenerate(lam) % 2 == 0) ? 1 : -1;
        v *= mp_q_factorial(lam.conjugate(), 1);
    } else {
        v = power(p.hecke_q(), dual_base_exponent_nondegenerate(lam)) * mp_q_factorial(lam.conjugate(), p.hecke_q());
    }
    for (const auto& x : lam.nodes())
        for (int t = 1; t < x.comp; ++t) v *= p.residue(x) - p.cyclotomic(t);
    return v;
}

/// M -> Delta M^T Delta^{-1} blockwise, Delta = diag(gamma_t).
inline AlgebraElement star(const Representation& rep, const AlgebraElement& x, const CoefficientTable& gamma) {
    if (gamma.n() != rep.n() || gamma.level() != rep.level())
        throw std::invalid_argument("star: table does not match the representation");
    AlgebraElement r = rep.zero();
    const auto& idx = rep.index();
    for (std::size_t b = 0; b < idx.num_blocks(); ++b) {
        const auto& src = x.block(b);
        if (!src.stored()) continue;
        const auto& ts = idx.tableaux(b);
        auto& dst = r.block(b);
        for (int i = 0; i < src.dim(); ++i)
            for (int j = 0; j < src.dim(); ++j) {
                const auto& v = src(j, i);
                if (sgn(v) == 0) continue;
                dst.at(i, j) = gamma.at(ts[static_cast<std::size_t>(i)]) * v / gamma.at(ts[static_cast<std::size_t>(j)]);
            }
    }
    return r.compact();
}

/// Exact determinant by Gaussian elimination over Q.
inline Scalar determinant(const Block& m) {
    int d = m.dim();
    std::vector<std::vector<Scalar>> a(static_cast<std::size_t>(d), std::vector<Scalar>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = m(i, j);
    Scalar det = 1;
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int r = c; r < d; ++r)
            if (sgn(a[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < d; ++r) {
            if (sgn(a[r][c]) == 0) continue;
            Scalar f = a[r][c] / a[c][c];
            for (int j = c; j < d; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

/// The basis elements of the rank-m subalgebra (m <= n, generated by T_0..T_{m-1}
/// and L_1..L_m) realised inside a rank-n representation.  With m = n these are
/// the usual bases.  Thread safe; elements are cached.
class Bases {
public:
    explicit Bases(const Representation& rep) : Bases(rep, rep.n()) {}

    Bases(const Representation& rep, int rank)
        : rep_(&rep), rank_(rank), params_(rep.params().with_n(rank)), index_(rep.level(), rank) {
        if (rank < 0 || rank > rep.n()) throw std::out_of_range("Bases: rank out of range");
        params_.validate();
        gamma_ = gamma_table(params_);
        gamma_prime_ = gamma_prime_table(params_);
        for (int k = 1; k <= rank; ++k) residues_.push_back(residue_universe(rep.level(), rank, k, params_));
    }

    const Representation& rep() const { return *rep_; }
    int rank() const { return rank_; }
    const Params& params() const { return params_; }
    const TableauIndex& index() const { return index_; }
    const CoefficientTable& gamma() const { return gamma_; }
    const CoefficientTable& gamma_prime() const { return gamma_prime_; }

    /// R(k) (C(k)) at this rank.
    const std::vector<Scalar>& residues(int k) const { return residues_.at(static_cast<std::size_t>(k - 1)); }

    /// -q, or -1 in the degenerate case.
    Scalar sign_base() const { return params_.sign_base(); }

    /// prod_{s=2}^{l} prod_{k=1}^{|lambda^(1)|+..+|lambda^(s-1)|} (L_k - Q_s).
    AlgebraElement cyclotomic_factor(const Multipartition& lam) const {
        AlgebraElement u = rep_->identity();
        int bound = 0;
        for (int s = 2; s <= lam.level(); ++s) {
            bound += lam.component(s - 1).size();
            for (int k = 1; k <= bound; ++k) u = u * (rep_->jm(k) - rep_->scalar(params_.cyclotomic(s)));
        }
        return u;
    }

    /// prod_{s=2}^{l} prod_{k=1}^{|lambda^(l)|+..+|lambda^(l-s+2)|} (L_k - Q_{l-s+1}).
    AlgebraElement dual_cyclotomic_factor(const Multipartition& lam) const {
        AlgebraElement u = rep_->identity();
        int l = lam.level();
        int bound = 0;
        for (int s = 2; s <= l; ++s) {
            bound += lam.component(l - s + 2).size();
            for (int k = 1; k <= bound; ++k) u = u * (rep_->jm(k) - rep_->scalar(params_.cyclotomic(l - s + 1)));
        }
        return u;
    }

    /// m_{t^lambda t^lambda} = (sum_{w in S_lambda} T_w) * cyclotomic factor.
    const AlgebraElement& m_base(const Multipartition& lam) const {
        return cached(m_base_, lam, [&] {
            AlgebraElement sum = rep_->zero();
            for (const auto& w : young_subgroup_elements(lam)) sum += rep_->word(w);
            return (sum * cyclotomic_factor(lam)).compact();
        });
    }

    /// n_{t_lambda t_lambda}: sign-weighted sum over S_{lambda'} times the dual
    /// cyclotomic factor; degenerate case carries (-1)^{n(lambda)}.
    const AlgebraElement& n_base(const Multipartition& lam) const {
        return cached(n_base_, lam, [&] {
            AlgebraElement sum = rep_->zero();
            Scalar base = sign_base();
            for (const auto& w : young_subgroup_elements(lam.conjugate()))
                sum += rep_->word(w) * power(base, -w.length());
            AlgebraElement r = sum * dual_cyclotomic_factor(lam);
            if (params_.is_degenerate() && dual_sign_exponent(lam) % 2 != 0) r *= Scalar(-1);
            return r.compact();
        });
    }

    /// m_st = T_{d(s)}^* m_{t^lambda t^lambda} T_{d(t)}.
    AlgebraElement m(const StandardTableau& s, const StandardTableau& t) const {
        require_same_shape(s, t);
        return d_star(s) * m_base(s.shape()) * d(t);
    }

    /// n_st = w^{l(d'(s)) + l(d'(t))} T_{d'(s)}^* n_{t_lambda t_lambda} T_{d'(t)}, w = (-q)^{-1} or -1.
    AlgebraElement n(const StandardTableau& s, const StandardTableau& t) const {
        require_same_shape(s, t);
        int len = d_prime_word(s).length() + d_prime_word(t).length();
        return dp_star(s) * n_base(s.shape()) * dp(t) * power(sign_base(), -len);
    }

    /// F_t = prod_k prod_{c in R(k), c != res_t(k)} (L_k - c) / (res_t(k) - c).
    const AlgebraElement& F(const StandardTableau& t) const {
        check_rank(t);
        return cached(F_, t, [&] {
            AlgebraElement e = rep_->identity();
            for (int k = 1; k <= rank_; ++k) {
                Scalar r = params_.residue(t, k);
                for (const auto& c : residues(k)) {
                    if (c == r) continue;
                    e = e * ((rep_->jm(k) - rep_->scalar(c)) * (1 / (r - c)));
                }
            }
            return e.compact();
        });
    }

    /// f_st = F_s m_st F_t, evaluated as (F_s T_{d(s)}^*) m_base (T_{d(t)} F_t).
    const AlgebraElement& f(const StandardTableau& s, const StandardTableau& t) const {
        require_same_shape(s, t);
        return cached(f_, Pair{s, t}, [&] {
            return (left_m(s) * m_base(s.shape()) * right_m(t)).compact();
        });
    }

    /// g_st = F_s n_st F_t.
    const AlgebraElement& g(const StandardTableau& s, const StandardTableau& t) const {
        require_same_shape(s, t);
        return cached(g_, Pair{s, t}, [&] {
            int len = d_prime_word(s).length() + d_prime_word(t).length();
            AlgebraElement x = left_n(s) * n_base(s.shape()) * right_n(t);
            return (x * power(sign_base(), -len)).compact();
        });
    }

    /// The factors T_i - A_i(t_{k-1}) along the chain of d(t) from t^lambda.
    std::vector<AlgebraElement> phi_factors(const StandardTableau& t) const {
        check_rank(t);
        auto w = d_word(t);
        auto chain = word_chain(initial_tableau(t.shape()), w);
        std::vector<AlgebraElement> out;
        for (std::size_t k = 1; k < chain.size(); ++k) {
            if (!tableau_strictly_dominates(chain[k - 1], chain[k]))
                throw std::logic_error("Phi chain step is not dominance decreasing at " + to_string(chain[k]));
            int i = w.letters[k - 1];
            out.push_back(rep_->generator(i) - rep_->scalar(coefficient_A(params_, chain[k - 1], i)));
        }
        return out;
    }

    /// Phi_t = prod_k (T_{i_k} - A_{i_k}(t_{k-1})).
    const AlgebraElement& phi(const StandardTableau& t) const {
        return cached(phi_, t, [&] {
            AlgebraElement x = rep_->identity();
            for (const auto& f : phi_factors(t)) x = x * f;
            return x;
        });
    }

    /// Phi_t^*: the same factors in reverse order (each factor is star-fixed).
    const AlgebraElement& phi_star(const StandardTableau& t) const {
        return cached(phi_star_, t, [&] {
            auto fs = phi_factors(t);
            AlgebraElement x = rep_->identity();
            for (auto it = fs.rbegin(); it != fs.rend(); ++it) x = x * *it;
            return x;
        });
    }

    /// T_{d(t)}, T_{d(t)}^*, T_{d'(t)}, T_{d'(t)}^*.
    const AlgebraElement& d(const StandardTableau& t) const {
        check_rank(t);
        return cached(d_, t, [&] { return rep_->word(d_word(t)); });
    }
    const AlgebraElement& d_star(const StandardTableau& t) const {
        check_rank(t);
        return cached(d_star_, t, [&] { return rep_->word(d_word(t).reversed()); });
    }
    const AlgebraElement& dp(const StandardTableau& t) const {
        check_rank(t);
        return cached(dp_, t, [&] { return rep_->word(d_prime_word(t)); });
    }
    const AlgebraElement& dp_star(const StandardTableau& t) const {
        check_rank(t);
        return cached(dp_star_, t, [&] { return rep_->word(d_prime_word(t).reversed()); });
    }

private:
    using Pair = std::pair<StandardTableau, StandardTableau>;

    template <class Key, class Make>
    const AlgebraElement& cached(std::map<Key, AlgebraElement>& store, const Key& key, Make&& make) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = store.find(key);
            if (it != store.end()) return it->second;
        }
        AlgebraElement value = make();
        std::lock_guard<std::mutex> lock(mu_);
        return store.emplace(key, std::move(value)).first->second;
    }

    const AlgebraElement& left_m(const StandardTableau& s) const {
        return cached(left_m_, s, [&] { return (F(s) * d_star(s)).compact(); });
    }
    const AlgebraElement& right_m(const StandardTableau& t) const {
        return cached(right_m_, t, [&] { return (d(t) * F(t)).compact(); });
    }
    const AlgebraElement& left_n(const StandardTableau& s) const {
        return cached(left_n_, s, [&] { return (F(s) * dp_star(s)).compact(); });
    }
    const AlgebraElement& right_n(const StandardTableau& t) const {
        return cached(right_n_, t, [&] { return (dp(t) * F(t)).compact(); });
    }

    void check_rank(const StandardTableau& t) const {
        if (t.size() != rank_ || t.level() != rep_->level())
            throw std::invalid_argument("tableau " + to_string(t) + " does not belong to this rank");
    }

    void require_same_shape(const StandardTableau& s, const StandardTableau& t) const {
        check_rank(s);
        check_rank(t);
        if (s.shape() != t.shape()) throw std::invalid_argument("tableaux " + to_string(s) + " and " + to_string(t) + " have different shapes");
    }

    const Representation* rep_;
    int rank_;
    Params params_;
    TableauIndex index_;
    CoefficientTable gamma_;
    CoefficientTable gamma_prime_;
    std::vector<std::vector<Scalar>> residues_;

    mutable std::mutex mu_;
    mutable std::map<Multipartition, AlgebraElement> m_base_;
    mutable std::map<Multipartition, AlgebraElement> n_base_;
    mutable std::map<StandardTableau, AlgebraElement> F_;
    mutable std::map<StandardTableau, AlgebraElement> d_, d_star_, dp_, dp_star_;
    mutable std::map<StandardTableau, AlgebraElement> left_m_, right_m_, left_n_, right_n_;
    mutable std::map<StandardTableau, AlgebraElement> phi_, phi_star_;
    mutable std::map<Pair, AlgebraElement> f_;
    mutable std::map<Pair, AlgebraElement> g_;
};

}  // namespace hecke
