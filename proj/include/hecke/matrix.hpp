#pragma once

// Dense square blocks over exact rationals and block-diagonal algebra elements.
//
// A block with no storage is the zero matrix of its dimension.  Products and
// sums keep zero blocks in that form, which keeps elements supported on a
// single shape (seminormal basis elements, idempotents) cheap to multiply.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

class Block {
public:
    Block() = default;
    explicit Block(int dim) : dim_(dim) {}

    static Block identity(int dim) {
        Block b(dim);
        b.materialize();
        for (int i = 0; i < dim; ++i) b.at(i, i) = 1;
        return b;
    }

    int dim() const { return dim_; }
    bool stored() const { return !data_.empty(); }

    const Scalar& operator()(int i, int j) const {
        static const Scalar zero(0);
        return stored() ? data_[idx(i, j)] : zero;
    }

    /// Mutable access; allocates zero storage on first use.
    Scalar& at(int i, int j) {
        materialize();
        return data_[idx(i, j)];
    }

    void materialize() {
        if (!stored() && dim_ > 0) data_.assign(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_), Scalar(0));
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (sgn(x) != 0) return false;
        return true;
    }

    /// Drops the storage of an all-zero block.
    void compact() {
        if (stored() && is_zero()) data_.clear();
    }

    /// Whether only diagonal entries may be nonzero.
    bool is_diagonal() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (i != j && sgn((*this)(i, j)) != 0) return false;
        return true;
    }

    Block transposed() const {
        Block r(dim_);
        if (!stored()) return r;
        r.materialize();
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r.data_[r.idx(j, i)] = data_[idx(i, j)];
        return r;
    }

    friend Block operator*(const Block& a, const Block& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("block dimension mismatch");
        Block r(a.dim_);
        if (!a.stored() || !b.stored()) return r;
        r.materialize();
        Scalar tmp;
        bool any = false;
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const Scalar& x = a.data_[a.idx(i, k)];
                if (sgn(x) == 0) continue;
                for (int j = 0; j < a.dim_; ++j) {
                    const Scalar& y = b.data_[b.idx(k, j)];
                    if (sgn(y) == 0) continue;
                    tmp = x * y;
                    r.data_[r.idx(i, j)] += tmp;
                    any = true;
                }
            }
        if (!any) r.data_.clear();
        return r;
    }

    Block& operator+=(const Block& b) { return accumulate(b, 1); }
    Block& operator-=(const Block& b) { return accumulate(b, -1); }

    Block& operator*=(const Scalar& c) {
        if (sgn(c) == 0) data_.clear();
        for (auto& x : data_) x *= c;
        return *this;
    }

    friend bool operator==(const Block& a, const Block& b) {
        if (a.dim_ != b.dim_) return false;
        if (!a.stored()) return b.is_zero();
        if (!b.stored()) return a.is_zero();
        return a.data_ == b.data_;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("block index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
    }

    Block& accumulate(const Block& b, int sign) {
        if (b.dim_ != dim_) throw std::invalid_argument("block dimension mismatch");
        if (!b.stored()) return *this;
        materialize();
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (sign > 0) data_[i] += b.data_[i];
            else data_[i] -= b.data_[i];
        }
        return *this;
    }

    int dim_ = 0;
    std::vector<Scalar> data_;
};

/// An element of the algebra as one matrix per multipartition of n.  The
/// context tag identifies the representation it came from; arithmetic across
/// contexts throws.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(std::uint64_t context, const std::vector<int>& dims) : context_(context) {
        blocks_.reserve(dims.size());
        for (int d : dims) blocks_.emplace_back(d);
    }

    std::uint64_t context() const { return context_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    const Block& block(std::size_t b) const { return blocks_.at(b); }
    Block& block(std::size_t b) { return blocks_.at(b); }

    bool is_zero() const {
        for (const auto& b : blocks_)
            if (!b.is_zero()) return false;
        return true;
    }

    AlgebraElement& compact() {
        for (auto& b : blocks_) b.compact();
        return *this;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check(o);
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += o.blocks_[i];
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check(o);
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= o.blocks_[i];
        return *this;
    }
    AlgebraElement& operator*=(const Scalar& c) {
        for (auto& b : blocks_) b *= c;
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
    friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        AlgebraElement r;
        r.context_ = a.context_;
        r.blocks_.reserve(a.blocks_.size());
        for (std::size_t i = 0; i < a.blocks_.size(); ++i) r.blocks_.push_back(a.blocks_[i] * b.blocks_[i]);
        return r;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        for (std::size_t i = 0; i < a.blocks_.size(); ++i)
            if (!(a.blocks_[i] == b.blocks_[i])) return false;
        return true;
    }

    /// If this == c * other for a unique scalar c (other nonzero), returns c.
    std::optional<Scalar> ratio_to(const AlgebraElement& other) const {
        check(other);
        std::optional<Scalar> c;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            const auto& x = blocks_[b];
            const auto& y = other.blocks_[b];
            for (int i = 0; i < x.dim(); ++i)
                for (int j = 0; j < x.dim(); ++j) {
                    const auto& xv = x(i, j);
                    const auto& yv = y(i, j);
                    if (sgn(yv) == 0) {
                        if (sgn(xv) != 0) return std::nullopt;
                        continue;
                    }
                    Scalar r = xv / yv;
                    if (c && *c != r) return std::nullopt;
                    c = r;
                }
        }
        return c;
    }

    /// Number of entries that are nonzero, across all blocks.
    std::size_t support_size() const {
        std::size_t s = 0;
        for (const auto& b : blocks_)
            for (int i = 0; i < b.dim(); ++i)
                for (int j = 0; j < b.dim(); ++j) s += sgn(b(i, j)) != 0 ? 1 : 0;
        return s;
    }

private:
    void check(const AlgebraElement& o) const {
        if (context_ != o.context_ || blocks_.size() != o.blocks_.size())
            throw std::invalid_argument("algebra elements from different contexts");
    }

    std::uint64_t context_ = 0;
    std::vector<Block> blocks_;
};

}  // namespace hecke
