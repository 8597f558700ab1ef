#pragma once

// Multipartitions, standard tableaux and permutation words.
//
// Conventions: rows, columns and components are 1-based.  A tableau stores,
// for every entry k = 1..n, the node that contains it.  Permutations act on
// tableaux from the right by permuting entries, so that t.s_i swaps i and
// i+1; a word (i_1, ..., i_l) applied to t means t.s_{i_1}.s_{i_2}...s_{i_l}.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;

    // Node order used everywhere: component, then row, then column.
    friend auto operator<=>(const Node& a, const Node& b) {
        if (auto c = a.comp <=> b.comp; c != 0) return c;
        if (auto c = a.row <=> b.row; c != 0) return c;
        return a.col <=> b.col;
    }
    friend bool operator==(const Node&, const Node&) = default;

    int content() const { return col - row; }
};

inline std::string to_string(const Node& x) {
    std::ostringstream os;
    os << '(' << x.row << ',' << x.col << ',' << x.comp << ')';
    return os.str();
}

class Partition {
public:
    Partition() = default;

    /// Trailing zeros are dropped; throws if the parts increase or go negative.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Row length, zero beyond the last row (rows are 1-based).
    int row(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    Partition conjugate() const {
        std::vector<int> c;
        int cols = parts_.empty() ? 0 : parts_.front();
        for (int j = 1; j <= cols; ++j) {
            int h = 0;
            for (int p : parts_) h += (p >= j) ? 1 : 0;
            c.push_back(h);
        }
        return Partition(std::move(c));
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) throw std::invalid_argument("multipartition level must be >= 1");
    }

    /// Convenience: ((2,1),(1)) written as {{2,1},{1}}.
    static Multipartition of(const std::vector<std::vector<int>>& rows) {
        std::vector<Partition> c;
        c.reserve(rows.size());
        for (const auto& r : rows) c.emplace_back(r);
        return Multipartition(std::move(c));
    }

    int level() const { return static_cast<int>(comps_.size()); }
    const Partition& component(int c) const { return comps_.at(static_cast<std::size_t>(c - 1)); }
    const std::vector<Partition>& components() const { return comps_; }

    int size() const {
        int s = 0;
        for (const auto& p : comps_) s += p.size();
        return s;
    }

    bool contains(const Node& x) const {
        return x.comp >= 1 && x.comp <= level() && x.row >= 1 && x.col >= 1 &&
               x.col <= component(x.comp).row(x.row);
    }

    /// Nodes of the Young diagram in node order.
    std::vector<Node> nodes() const {
        std::vector<Node> out;
        for (int c = 1; c <= level(); ++c) {
            const auto& p = component(c);
            for (int i = 1; i <= p.length(); ++i)
                for (int j = 1; j <= p.row(i); ++j) out.push_back({i, j, c});
        }
        return out;
    }

    /// lambda' = (lambda^(l)', ..., lambda^(1)').
    Multipartition conjugate() const {
        std::vector<Partition> c;
        for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) c.push_back(it->conjugate());
        return Multipartition(std::move(c));
    }

    std::vector<Node> removable_nodes() const {
        std::vector<Node> out;
        for (int c = 1; c <= level(); ++c) {
            const auto& p = component(c);
            for (int i = 1; i <= p.length(); ++i)
                if (p.row(i) > p.row(i + 1)) out.push_back({i, p.row(i), c});
        }
        return out;
    }

    std::vector<Node> addable_nodes() const {
        std::vector<Node> out;
        for (int c = 1; c <= level(); ++c) {
            const auto& p = component(c);
            for (int i = 1; i <= p.length() + 1; ++i)
                if (i == 1 || p.row(i - 1) > p.row(i)) out.push_back({i, p.row(i) + 1, c});
        }
        return out;
    }

    Multipartition with_node(const Node& x) const {
        auto rows = raw();
        auto& r = rows.at(static_cast<std::size_t>(x.comp - 1));
        if (static_cast<int>(r.size()) < x.row) r.resize(static_cast<std::size_t>(x.row), 0);
        ++r[static_cast<std::size_t>(x.row - 1)];
        return of(rows);
    }

    Multipartition without_node(const Node& x) const {
        auto rows = raw();
        --rows.at(static_cast<std::size_t>(x.comp - 1)).at(static_cast<std::size_t>(x.row - 1));
        return of(rows);
    }

    std::vector<std::vector<int>> raw() const {
        std::vector<std::vector<int>> rows;
        for (const auto& p : comps_) rows.push_back(p.parts());
        return rows;
    }

    friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
    friend bool operator==(const Multipartition&, const Multipartition&) = default;

private:
    std::vector<Partition> comps_;
};

inline std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts()[static_cast<std::size_t>(i)];
    os << ')';
    return os.str();
}

/// Level one prints as "(2,1)", higher levels as "((2,1),(1))".
inline std::string to_string(const Multipartition& m) {
    if (m.level() == 1) return to_string(m.component(1));
    std::string s = "(";
    for (int c = 1; c <= m.level(); ++c) {
        if (c > 1) s += ',';
        s += to_string(m.component(c));
    }
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Multipartition& m) { return os << to_string(m); }

/// Dominance: for all s and i the cumulative sums of lambda bound those of mu.
inline bool dominates(const Multipartition& lam, const Multipartition& mu) {
    if (lam.level() != mu.level()) throw std::invalid_argument("dominates: level mismatch");
    if (lam.size() != mu.size()) throw std::invalid_argument("dominates: size mismatch");
    int before_l = 0;
    int before_m = 0;
    for (int s = 1; s <= lam.level(); ++s) {
        const auto& a = lam.component(s);
        const auto& b = mu.component(s);
        int rows = std::max(a.length(), b.length());
        int sa = before_l;
        int sb = before_m;
        for (int i = 1; i <= rows; ++i) {
            sa += a.row(i);
            sb += b.row(i);
            if (sa < sb) return false;
        }
        before_l += a.size();
        before_m += b.size();
        if (before_l < before_m) return false;
    }
    return true;
}

/// All multipartitions of n with the given level, in canonical order
/// (reverse lexicographic on the component row sequences, so ((n),0,...) first).
inline std::vector<Multipartition> multipartitions(int level, int n) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    // partitions of m, each as a row vector, for m <= n
    std::vector<std::vector<std::vector<int>>> parts(static_cast<std::size_t>(n + 1));
    parts[0] = {{}};
    for (int m = 1; m <= n; ++m) {
        std::vector<std::vector<int>> acc;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left, int maxpart) -> void {
            if (left == 0) {
                acc.push_back(cur);
                return;
            }
            for (int p = std::min(left, maxpart); p >= 1; --p) {
                cur.push_back(p);
                self(self, left - p, p);
                cur.pop_back();
            }
        };
        rec(rec, m, m);
        parts[static_cast<std::size_t>(m)] = std::move(acc);
    }
    std::vector<Multipartition> out;
    std::vector<std::vector<int>> cur(static_cast<std::size_t>(level));
    auto rec = [&](auto&& self, int c, int left) -> void {
        if (c == level - 1) {
            for (const auto& p : parts[static_cast<std::size_t>(left)]) {
                cur[static_cast<std::size_t>(c)] = p;
                out.push_back(Multipartition::of(cur));
            }
            return;
        }
        for (int m = left; m >= 0; --m)
            for (const auto& p : parts[static_cast<std::size_t>(m)]) {
                cur[static_cast<std::size_t>(c)] = p;
                self(self, c + 1, left - m);
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.raw() > b.raw(); });
    return out;
}

/// A word in the simple transpositions s_1, ..., s_{n-1}.
struct PermWord {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    PermWord reversed() const { return {std::vector<int>(letters.rbegin(), letters.rend())}; }

    /// One-line notation of the product acting on positions 1..n
    /// (image[k-1] = where k is sent by applying the letters left to right).
    std::vector<int> permutation(int n) const {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        for (int i : letters) {
            if (i < 1 || i >= n) throw std::out_of_range("PermWord letter out of range");
            for (auto& v : img) {
                if (v == i) v = i + 1;
                else if (v == i + 1) v = i;
            }
        }
        return img;
    }

    friend bool operator==(const PermWord&, const PermWord&) = default;
};

inline int inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv;
}

inline std::string to_string(const PermWord& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.letters.size(); ++i) s += (i ? "," : "") + std::to_string(w.letters[i]);
    return s + ")";
}

class StandardTableau {
public:
    StandardTableau() = default;

    /// Validates standardness; positions[k] is the node holding entry k+1.
    StandardTableau(Multipartition shape, std::vector<Node> positions)
        : shape_(std::move(shape)), pos_(std::move(positions)) {
        if (!is_standard(shape_, pos_)) throw std::invalid_argument("not a standard tableau");
    }

    static bool is_standard(const Multipartition& shape, const std::vector<Node>& pos) {
        if (static_cast<int>(pos.size()) != shape.size()) return false;
        // every prefix must be a diagram: each new node must be addable
        std::vector<std::vector<int>> rows;
        for (const auto& p : shape.components()) rows.emplace_back(static_cast<std::size_t>(p.length()), 0);
        for (const auto& x : pos) {
            if (!shape.contains(x)) return false;
            auto& r = rows[static_cast<std::size_t>(x.comp - 1)];
            auto i = static_cast<std::size_t>(x.row - 1);
            if (x.col != r[i] + 1) return false;
            if (i > 0 && r[i - 1] < x.col) return false;
            ++r[i];
        }
        return true;
    }

    const Multipartition& shape() const { return shape_; }
    const std::vector<Node>& positions() const { return pos_; }
    int size() const { return static_cast<int>(pos_.size()); }
    int level() const { return shape_.level(); }

    /// Node containing entry k (1-based).
    const Node& node(int k) const { return pos_.at(static_cast<std::size_t>(k - 1)); }

    /// Entry in node x, or 0 when x is outside the diagram.
    int entry(const Node& x) const {
        for (std::size_t k = 0; k < pos_.size(); ++k)
            if (pos_[k] == x) return static_cast<int>(k) + 1;
        return 0;
    }

    /// t' = (t^(l)', ..., t^(1)').
    StandardTableau conjugate() const {
        std::vector<Node> p;
        p.reserve(pos_.size());
        int l = level();
        for (const auto& x : pos_) p.push_back({x.col, x.row, l - x.comp + 1});
        return StandardTableau(shape_.conjugate(), std::move(p));
    }

    /// The tableau on entries 1..m.
    StandardTableau restrict(int m) const {
        if (m < 0 || m > size()) throw std::out_of_range("restrict: m out of range");
        std::vector<Node> p(pos_.begin(), pos_.begin() + m);
        return StandardTableau(shape_of_prefix(m), std::move(p));
    }

    Multipartition shape_of_prefix(int m) const {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(level()));
        for (int k = 0; k < m; ++k) {
            const auto& x = pos_[static_cast<std::size_t>(k)];
            auto& r = rows[static_cast<std::size_t>(x.comp - 1)];
            if (static_cast<int>(r.size()) < x.row) r.resize(static_cast<std::size_t>(x.row), 0);
            ++r[static_cast<std::size_t>(x.row - 1)];
        }
        return Multipartition::of(rows);
    }

    /// (j - i, c) for the node holding k.
    std::pair<int, int> residue_symbol(int k) const {
        const auto& x = node(k);
        return {x.content(), x.comp};
    }

    bool same_row(int a, int b) const { return node(a).comp == node(b).comp && node(a).row == node(b).row; }
    bool same_col(int a, int b) const { return node(a).comp == node(b).comp && node(a).col == node(b).col; }

    /// t.s_i if it is standard.
    std::optional<StandardTableau> swapped(int i) const {
        if (i < 1 || i >= size()) return std::nullopt;
        auto p = pos_;
        std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
        if (!is_standard(shape_, p)) return std::nullopt;
        return StandardTableau(shape_, std::move(p));
    }

    /// The tableau with n+1 placed in the addable node x.
    StandardTableau extended(const Node& x) const {
        auto p = pos_;
        p.push_back(x);
        return StandardTableau(shape_.with_node(x), std::move(p));
    }

    friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return a.pos_ <=> b.pos_;
    }
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    Multipartition shape_;
    std::vector<Node> pos_;
};

/// Positions joined as "(r,c,k);(r,c,k);..." in entry order.
inline std::string positions_string(const StandardTableau& t) {
    std::string s;
    for (int k = 1; k <= t.size(); ++k) s += (k > 1 ? ";" : "") + to_string(t.node(k));
    return s;
}

/// Rows of each component, e.g. "[[1,2],[3]]|[[4]]".
inline std::string to_string(const StandardTableau& t) {
    std::string s;
    for (int c = 1; c <= t.level(); ++c) {
        if (c > 1) s += '|';
        const auto& p = t.shape().component(c);
        s += '[';
        for (int i = 1; i <= p.length(); ++i) {
            s += (i > 1 ? ",[" : "[");
            for (int j = 1; j <= p.row(i); ++j) s += (j > 1 ? "," : "") + std::to_string(t.entry({i, j, c}));
            s += ']';
        }
        s += ']';
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const StandardTableau& t) { return os << to_string(t); }

inline bool tableau_dominates(const StandardTableau& s, const StandardTableau& t) {
    if (s.size() != t.size()) throw std::invalid_argument("tableau_dominates: size mismatch");
    for (int k = 1; k <= s.size(); ++k)
        if (!dominates(s.shape_of_prefix(k), t.shape_of_prefix(k))) return false;
    return true;
}

inline bool tableau_strictly_dominates(const StandardTableau& s, const StandardTableau& t) {
    return s != t && tableau_dominates(s, t);
}

/// Std(lambda) in canonical order: lexicographic on the position sequence.
inline std::vector<StandardTableau> standard_tableaux(const Multipartition& lam) {
    std::vector<StandardTableau> out;
    std::vector<Node> cur;
    const auto n = static_cast<std::size_t>(lam.size());
    std::vector<std::vector<int>> rows;
    for (const auto& p : lam.components()) rows.emplace_back(static_cast<std::size_t>(p.length()), 0);
    // addable nodes are visited in node order, so the output is already sorted
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == n) {
            out.emplace_back(lam, cur);
            return;
        }
        for (int c = 1; c <= lam.level(); ++c) {
            auto& r = rows[static_cast<std::size_t>(c - 1)];
            const auto& target = lam.component(c);
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (r[i] >= target.row(static_cast<int>(i) + 1)) continue;
                if (i > 0 && r[i - 1] <= r[i]) continue;
                ++r[i];
                cur.push_back({static_cast<int>(i) + 1, r[i], c});
                self(self);
                cur.pop_back();
                --r[i];
            }
        }
    };
    rec(rec);
    return out;
}

/// t^lambda: 1..n along the rows of lambda^(1), then lambda^(2), ...
inline StandardTableau initial_tableau(const Multipartition& lam) { return StandardTableau(lam, lam.nodes()); }

/// t_lambda := (t^{lambda'})': filled down the columns, last component first.
inline StandardTableau column_initial_tableau(const Multipartition& lam) {
    return initial_tableau(lam.conjugate()).conjugate();
}

/// Applies the letters left to right (entries i, i+1 swapped for each letter).
inline StandardTableau apply_word(const StandardTableau& t, const PermWord& w) {
    auto p = t.positions();
    for (int i : w.letters) {
        if (i < 1 || i >= t.size()) throw std::out_of_range("apply_word: letter out of range");
        std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    }
    return StandardTableau(t.shape(), std::move(p));
}

enum class WordOrder { largest_first, smallest_first };

/// Reduced word w with ref.w = t.  Built by sorting t back to ref one adjacent
/// swap at a time (each swap removes one inversion and keeps the tableau
/// standard), then reversing the swap sequence.
inline PermWord reduced_word_between(const StandardTableau& ref, const StandardTableau& t,
                                     WordOrder order = WordOrder::largest_first) {
    if (ref.shape() != t.shape()) throw std::invalid_argument("reduced_word_between: shape mismatch");
    int n = t.size();
    // rank of a node = its entry in ref
    auto rank = [&](const Node& x) { return ref.entry(x); };
    auto pos = t.positions();
    std::vector<int> rev;
    while (true) {
        int pick = 0;
        if (order == WordOrder::largest_first) {
            for (int i = n - 1; i >= 1; --i)
                if (rank(pos[static_cast<std::size_t>(i)]) < rank(pos[static_cast<std::size_t>(i - 1)])) {
                    pick = i;
                    break;
                }
        } else {
            for (int i = 1; i <= n - 1; ++i)
                if (rank(pos[static_cast<std::size_t>(i)]) < rank(pos[static_cast<std::size_t>(i - 1)])) {
                    pick = i;
                    break;
                }
        }
        if (pick == 0) break;
        std::swap(pos[static_cast<std::size_t>(pick - 1)], pos[static_cast<std::size_t>(pick)]);
        rev.push_back(pick);
    }
    return {std::vector<int>(rev.rbegin(), rev.rend())};
}

/// d(t): t^lambda . d(t) = t.
inline PermWord d_word(const StandardTableau& t) { return reduced_word_between(initial_tableau(t.shape()), t); }

/// d'(t): t_lambda . d'(t) = t.
inline PermWord d_prime_word(const StandardTableau& t) {
    return reduced_word_between(column_initial_tableau(t.shape()), t);
}

/// The chain ref = t_0, t_1 = t_0.s_{i_1}, ..., t_l for a word.
inline std::vector<StandardTableau> word_chain(const StandardTableau& start, const PermWord& w) {
    std::vector<StandardTableau> chain{start};
    for (int i : w.letters) {
        auto next = chain.back().swapped(i);
        if (!next) throw std::logic_error("word_chain: intermediate tableau is not standard");
        chain.push_back(*next);
    }
    return chain;
}

struct YoungSubgroupOptions {
    std::uint64_t warn_cap = 3628800;  // 10!
    std::ostream* warn = &std::clog;
};

/// Reduced words for every element of S_lambda, each once.  The subgroup is
/// the product of the symmetric groups on consecutive row intervals (rows of
/// lambda^(1) top to bottom, then lambda^(2), ...).  Within a block of size m
/// every element is c_1 c_2 ... c_{m-1} with c_k in {e, s_k, s_k s_{k-1}, ...,
/// s_k ... s_1}, lengths adding.
inline std::vector<PermWord> young_subgroup_elements(const Multipartition& lam,
                                                     const YoungSubgroupOptions& opts = {}) {
    std::vector<std::pair<int, int>> blocks;  // (offset, size)
    int offset = 0;
    std::uint64_t order = 1;
    for (const auto& p : lam.components())
        for (int r : p.parts()) {
            blocks.emplace_back(offset, r);
            offset += r;
            for (int k = 2; k <= r; ++k) order *= static_cast<std::uint64_t>(k);
        }
    if (order > opts.warn_cap && opts.warn)
        *opts.warn << "warning: |S_lambda| = " << order << " for lambda = " << to_string(lam)
                   << " exceeds the configured cap " << opts.warn_cap << '\n';

    std::vector<PermWord> out{PermWord{}};
    for (auto [off, m] : blocks) {
        for (int k = 1; k < m; ++k) {
            std::vector<PermWord> next;
            next.reserve(out.size() * static_cast<std::size_t>(k + 1));
            for (const auto& w : out)
                for (int len = 0; len <= k; ++len) {
                    PermWord v = w;
                    for (int j = 0; j < len; ++j) v.letters.push_back(off + k - j);
                    next.push_back(std::move(v));
                }
            out = std::move(next);
        }
    }
    return out;
}

/// n(lambda) = sum_i (i-1)|lambda^(i)|.
inline int dual_sign_exponent(const Multipartition& lam) {
    int e = 0;
    for (int c = 1; c <= lam.level(); ++c) e += (c - 1) * lam.component(c).size();
    return e;
}

/// Exponent of q in the base value of the primed gamma at t^{lambda'}:
/// -sum over rows r of every lambda^(c)' of r(r-1)/2.
inline int dual_base_exponent_nondegenerate(const Multipartition& lam) {
    int e = 0;
    for (const auto& p : lam.components()) {
        auto conj = p.conjugate();
        for (int r : conj.parts()) e -= r * (r - 1) / 2;
    }
    return e;
}

/// Exponent of -1 in the degenerate analogue: sum_{s>1} (s-1)|lambda^(s)|.
inline int dual_base_exponent_degenerate(const Multipartition& lam) { return dual_sign_exponent(lam); }

/// Number of standard tableaux, by the hook length formula per component
/// times the multinomial coefficient.  Independent of the enumerator.
inline std::uint64_t count_standard(const Multipartition& lam) {
    // exact with 128-bit intermediates for the sizes used here
    unsigned __int128 num = 1;
    unsigned __int128 den = 1;
    int n = lam.size();
    for (int k = 2; k <= n; ++k) num *= static_cast<unsigned>(k);
    for (const auto& p : lam.components()) {
        auto conj = p.conjugate();
        for (int i = 1; i <= p.length(); ++i)
            for (int j = 1; j <= p.row(i); ++j)
                den *= static_cast<unsigned>(p.row(i) - j + conj.row(j) - i + 1);
    }
    return static_cast<std::uint64_t>(num / den);
}

}  // namespace hecke
