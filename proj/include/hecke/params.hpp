#pragma once

// Parameter sets for both algebra variants.
//
// Non-degenerate: Hecke parameter q and cyclotomic parameters Q_1..Q_l; the
// residue of a node (i,j,c) is q^{j-i} Q_c.  Degenerate: u_1..u_l; the content
// of (i,j,c) is j - i + u_c.  Most constructions are written once against
// Params::residue and the few variant-specific scalars below.
//
// The primed parameters are (q^{-1}, Q_l..Q_1) and (-u_l, .., -u_1).  Note:
// the substitution applied to the parameter is q -> q^{-1}; the sign in
// T_i -> -q^{-1} T_i belongs to the generators only.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hecke/combinatorics.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

enum class Variant { nondegenerate, degenerate };

inline std::string to_string(Variant v) { return v == Variant::nondegenerate ? "nondeg" : "deg"; }

inline Variant parse_variant(const std::string& s) {
    if (s == "nondeg" || s == "nondegenerate") return Variant::nondegenerate;
    if (s == "deg" || s == "degenerate") return Variant::degenerate;
    throw std::invalid_argument("unknown variant '" + s + "' (expected nondeg or deg)");
}

struct NonDegenerateParams {
    Scalar q;
    std::vector<Scalar> Q;
    int n = 0;
};

struct DegenerateParams {
    std::vector<Scalar> u;
    int n = 0;
};

/// Thrown when parameters fail semisimplicity or separation.  what() names
/// the vanishing factor, e.g. "q^1·Q_1 − Q_2 = 0".
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string q_power_label(int d, int i) {
    return "q^" + std::to_string(d) + "·Q_" + std::to_string(i);
}

}  // namespace detail

/// First vanishing factor of prod_i [i]_q * prod_{i<j,|d|<n} (q^d Q_i - Q_j).
inline std::optional<std::string> semisimplicity_violation(const Scalar& q, const std::vector<Scalar>& Q, int n) {
    if (q == 0) return "q = 0";
    for (int i = 1; i <= n; ++i)
        if (q_int(i, q) == 0) return "[" + std::to_string(i) + "]_q = 0";
    for (std::size_t i = 0; i < Q.size(); ++i)
        for (std::size_t j = i + 1; j < Q.size(); ++j)
            for (int d = -(n - 1); d <= n - 1; ++d)
                if (power(q, d) * Q[i] - Q[j] == 0)
                    return detail::q_power_label(d, static_cast<int>(i) + 1) + " − Q_" + std::to_string(j + 1) + " = 0";
    return std::nullopt;
}

inline bool semisimple_nondegenerate(const Scalar& q, const std::vector<Scalar>& Q, int n) {
    return !semisimplicity_violation(q, Q, n).has_value();
}

/// First vanishing factor of n! * prod_{i<j,|d|<n} (d + u_i - u_j).
inline std::optional<std::string> semisimplicity_violation(const std::vector<Scalar>& u, int n) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            for (int d = -(n - 1); d <= n - 1; ++d)
                if (d + u[i] - u[j] == 0)
                    return std::to_string(d) + " + u_" + std::to_string(i + 1) + " − u_" + std::to_string(j + 1) + " = 0";
    return std::nullopt;
}

inline bool semisimple_degenerate(const std::vector<Scalar>& u, int n) {
    return !semisimplicity_violation(u, n).has_value();
}

inline NonDegenerateParams prime_params(const NonDegenerateParams& p) {
    if (p.q == 0) throw ParameterError("q = 0");
    return {1 / p.q, std::vector<Scalar>(p.Q.rbegin(), p.Q.rend()), p.n};
}

inline DegenerateParams prime_params_degenerate(const DegenerateParams& p) {
    std::vector<Scalar> u;
    for (auto it = p.u.rbegin(); it != p.u.rend(); ++it) u.push_back(-*it);
    return {std::move(u), p.n};
}

class Params {
public:
    Params() = default;
    explicit Params(NonDegenerateParams p) : data_(std::move(p)) {}
    explicit Params(DegenerateParams p) : data_(std::move(p)) {}

    /// q = base, Q_c = base^{(c-1)(2n+1)} (non-degenerate) or u_c = base*(c-1)(2n+1)
    /// (degenerate).  The spacing keeps every q^a Q_b (resp. a + u_b) with
    /// |a| <= n distinct.
    static Params generated(Variant v, int level, int n, const Scalar& base) {
        if (level < 1) throw std::invalid_argument("level must be >= 1");
        if (n < 0) throw std::invalid_argument("n must be >= 0");
        if (v == Variant::nondegenerate) {
            NonDegenerateParams p{base, {}, n};
            for (int c = 1; c <= level; ++c) p.Q.push_back(power(base, (c - 1) * (2 * n + 1)));
            return Params(std::move(p));
        }
        DegenerateParams p{{}, n};
        for (int c = 1; c <= level; ++c) p.u.push_back(base * (c - 1) * (2 * n + 1));
        return Params(std::move(p));
    }

    /// q = 3, Q_c = 3^{(c-1)(2n+1)}; u_c = (c-1)(2n+1).
    static Params defaults(Variant v, int level, int n) {
        return generated(v, level, n, v == Variant::nondegenerate ? Scalar(3) : Scalar(1));
    }

    Variant variant() const { return is_degenerate() ? Variant::degenerate : Variant::nondegenerate; }
    bool is_degenerate() const { return std::holds_alternative<DegenerateParams>(data_); }

    const NonDegenerateParams& nondegenerate() const { return std::get<NonDegenerateParams>(data_); }
    const DegenerateParams& degenerate() const { return std::get<DegenerateParams>(data_); }

    int level() const {
        return is_degenerate() ? static_cast<int>(degenerate().u.size()) : static_cast<int>(nondegenerate().Q.size());
    }
    int n() const { return is_degenerate() ? degenerate().n : nondegenerate().n; }

    /// Same parameter values, viewed at a different rank (e.g. n-1 for branching).
    Params with_n(int m) const {
        Params p = *this;
        if (p.is_degenerate()) std::get<DegenerateParams>(p.data_).n = m;
        else std::get<NonDegenerateParams>(p.data_).n = m;
        return p;
    }

    /// q, or 1 in the degenerate case.  [k]_q at q = 1 is k, so q-factorials
    /// specialise to ordinary factorials.
    Scalar hecke_q() const { return is_degenerate() ? Scalar(1) : nondegenerate().q; }

    /// -q, or -1 in the degenerate case: the base of the sign-twisted weights.
    Scalar sign_base() const { return -hecke_q(); }

    /// q^{content} Q_comp, or content + u_comp.
    Scalar residue(int content, int comp) const {
        if (is_degenerate()) return content + degenerate().u.at(static_cast<std::size_t>(comp - 1));
        return power(nondegenerate().q, content) * nondegenerate().Q.at(static_cast<std::size_t>(comp - 1));
    }
    Scalar residue(const Node& x) const { return residue(x.content(), x.comp); }
    Scalar residue(const StandardTableau& t, int k) const { return residue(t.node(k)); }

    /// Cyclotomic parameter of component c (Q_c or u_c).
    Scalar cyclotomic(int c) const { return residue(0, c); }

    Params primed() const {
        if (is_degenerate()) return Params(prime_params_degenerate(degenerate()));
        return Params(prime_params(nondegenerate()));
    }

    std::optional<std::string> semisimplicity_violation() const {
        if (is_degenerate()) return hecke::semisimplicity_violation(degenerate().u, n());
        if (nondegenerate().q == 1) return std::string("q = 1");
        return hecke::semisimplicity_violation(nondegenerate().q, nondegenerate().Q, n());
    }

    /// Residue values q^a Q_b (or a + u_b) for |a| <= n-1 must be pairwise distinct.
    std::optional<std::string> separation_violation() const {
        std::vector<std::pair<Scalar, std::pair<int, int>>> seen;
        for (int b = 1; b <= level(); ++b)
            for (int a = -(n() - 1); a <= n() - 1; ++a) {
                Scalar v = residue(a, b);
                for (const auto& [w, ab] : seen)
                    if (w == v) return separation_label(ab.first, ab.second) + " = " + separation_label(a, b);
                seen.push_back({v, {a, b}});
            }
        return std::nullopt;
    }

    std::optional<std::string> violation() const {
        if (level() < 1) return std::string("level must be >= 1");
        if (n() < 0) return std::string("n must be >= 0");
        if (auto v = semisimplicity_violation()) return v;
        return separation_violation();
    }

    /// Throws ParameterError naming the failing factor.
    void validate() const {
        if (auto v = violation()) throw ParameterError(*v);
    }

    friend bool operator==(const Params& a, const Params& b) {
        if (a.is_degenerate() != b.is_degenerate() || a.n() != b.n()) return false;
        if (a.is_degenerate()) return a.degenerate().u == b.degenerate().u;
        return a.nondegenerate().q == b.nondegenerate().q && a.nondegenerate().Q == b.nondegenerate().Q;
    }

    std::string describe() const {
        std::string s = to_string(variant()) + " l=" + std::to_string(level()) + " n=" + std::to_string(n());
        if (is_degenerate()) {
            s += " u=";
            for (std::size_t i = 0; i < degenerate().u.size(); ++i) s += (i ? "," : "") + to_string(degenerate().u[i]);
        } else {
            s += " q=" + to_string(nondegenerate().q) + " Q=";
            for (std::size_t i = 0; i < nondegenerate().Q.size(); ++i)
                s += (i ? "," : "") + to_string(nondegenerate().Q[i]);
        }
        return s;
    }

private:
    std::string separation_label(int a, int b) const {
        if (is_degenerate()) return std::to_string(a) + " + u_" + std::to_string(b);
        return detail::q_power_label(a, b);
    }

    std::variant<NonDegenerateParams, DegenerateParams> data_;
};

/// R(k) (or C(k)): distinct residue values of entry k over every standard
/// tableau of every multipartition of n, sorted.  Deduplication is by value,
/// which matches the symbolic (content, component) set under separation.
inline std::vector<Scalar> residue_universe(int level, int n, int k, const Params& params) {
    if (k < 1 || k > n) throw std::out_of_range("residue_universe: k out of range");
    std::vector<Scalar> vals;
    for (const auto& lam : multipartitions(level, n))
        for (const auto& t : standard_tableaux(lam)) vals.push_back(params.residue(t, k));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

/// Symbolic counterpart: the (content, component) pairs that entry k can
/// occupy, i.e. the addable nodes of multipartitions of k-1.
inline std::set<std::pair<int, int>> residue_symbols(int level, int k) {
    std::set<std::pair<int, int>> out;
    for (const auto& mu : multipartitions(level, k - 1))
        for (const auto& x : mu.addable_nodes()) out.insert({x.content(), x.comp});
    return out;
}

}  // namespace hecke
