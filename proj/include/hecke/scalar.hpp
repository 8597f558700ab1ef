#pragma once

// Exact rationals (GMP) and the q-integer helpers.

#include <gmpxx.h>

#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/combinatorics.hpp"

namespace hecke {

using Scalar = mpq_class;

/// Accepts "p" or "p/q" with an optional leading minus; no decimals, no floats.
inline Scalar parse_scalar(const std::string& text) {
    static const std::regex form(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, form)) throw std::invalid_argument("not a rational literal: '" + text + "'");
    mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    mpz_class den(m[2].matched ? m[2].str() : std::string("1"), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Scalar r(num, den);
    r.canonicalize();
    return r;
}

inline std::vector<Scalar> parse_scalar_list(const std::string& text) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_scalar(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Scalar& x) { return x.get_str(10); }

/// x^e for any integer e; x must be nonzero when e < 0.
inline Scalar power(const Scalar& x, int e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("negative power of zero");
        Scalar inv = 1 / x;
        return power(inv, -e);
    }
    Scalar r = 1;
    Scalar b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// [k]_q = 1 + q + ... + q^{k-1}.
inline Scalar q_int(int k, const Scalar& q) {
    if (k < 0) throw std::invalid_argument("q_int: k must be >= 0");
    Scalar r = 0;
    Scalar p = 1;
    for (int i = 0; i < k; ++i) {
        r += p;
        p *= q;
    }
    return r;
}

/// [m]!_q = [1]_q [2]_q ... [m]_q.
inline Scalar q_factorial(int m, const Scalar& q) {
    Scalar r = 1;
    for (int i = 1; i <= m; ++i) r *= q_int(i, q);
    return r;
}

/// [lambda]!_q = product over all rows of all components of [row]!_q.
inline Scalar mp_q_factorial(const Multipartition& lam, const Scalar& q) {
    Scalar r = 1;
    for (const auto& p : lam.components())
        for (int row : p.parts()) r *= q_factorial(row, q);
    return r;
}

}  // namespace hecke
