#pragma once

// Scalars of the seminormal action of T_i (resp. s_i) on a seminormal basis.
// In the degenerate case A, B are the coefficients a_i, b_i.

#include "hecke/combinatorics.hpp"
#include "hecke/params.hpp"

namespace hecke {

/// A_i(s) = (q-1) res_s(i+1) / (res_s(i+1) - res_s(i));  a_i(s) = 1 / (c_s(i+1) - c_s(i)).
inline Scalar coefficient_A(const Params& p, const StandardTableau& s, int i) {
    Scalar r1 = p.residue(s, i);
    Scalar r2 = p.residue(s, i + 1);
    if (r1 == r2) throw std::domain_error("coefficient_A: equal residues (parameters not separated)");
    if (p.is_degenerate()) return 1 / (r2 - r1);
    return (p.hecke_q() - 1) * r2 / (r2 - r1);
}

/// B_i(s) = (q r1 - r2)(r1 - q r2) / (r2 - r1)^2 with r_k = res_s(i+k-1);
/// b_i(s) = (c1 - c2 + 1)(c1 - c2 - 1) / (c2 - c1)^2.
inline Scalar coefficient_B(const Params& p, const StandardTableau& s, int i) {
    Scalar r1 = p.residue(s, i);
    Scalar r2 = p.residue(s, i + 1);
    Scalar den = (r2 - r1) * (r2 - r1);
    if (den == 0) throw std::domain_error("coefficient_B: equal residues (parameters not separated)");
    if (p.is_degenerate()) return (r1 - r2 + 1) * (r1 - r2 - 1) / den;
    const Scalar& q = p.nondegenerate().q;
    return (q * r1 - r2) * (r1 - q * r2) / den;
}

/// gamma_lower / gamma_upper when upper = lower.(i,i+1) strictly dominates
/// lower; a = res_upper(i), b = res_lower(i).
inline Scalar gamma_step_ratio(const Params& p, const Scalar& a, const Scalar& b) {
    Scalar den = (a - b) * (a - b);
    if (den == 0) throw std::domain_error("gamma_step_ratio: equal residues");
    if (p.is_degenerate()) return (a - b + 1) * (a - b - 1) / den;
    const Scalar& q = p.nondegenerate().q;
    return (q * a - b) * (a - q * b) / den;
}

/// Eigenvalue of T_i (s_i) when i, i+1 share a row: q (resp. 1).
inline Scalar same_row_eigenvalue(const Params& p) { return p.hecke_q(); }

}  // namespace hecke
