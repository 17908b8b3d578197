#pragma once

#include "hopfexp/hopf.hpp"

namespace hopfexp {

/// A left twist J together with its inverse, as elements of H (x) H.
struct TwistElement {
    TensorElem j;
    TensorElem j_inverse;

    static TwistElement trivial(const HopfAlgebra& h);
    static TwistElement from_coords(const HopfAlgebra& h, const Vec& j, const Vec& j_inv);
    Vec j_coords(const HopfAlgebra& h) const;
    Vec j_inverse_coords(const HopfAlgebra& h) const;
};

struct TwistReport {
    bool ok = true;
    std::string failed_invariant;   // "invertibility", "cocycle", "counit"
    std::int64_t witness_index = -1;  // first differing tensor coordinate
    std::string to_string() const;
};

/// Checks invertibility, the left 2-cocycle equation and counit normalization.
TwistReport validate_twist(const HopfAlgebra& h, const TwistElement& t);

/// H^J: same algebra, Delta^J = J Delta(.) J^{-1}, S^J = W S(.) V with
/// W = m(id (x) S)(J) and V = m(S (x) id)(J^{-1}). Errc::InvalidTwist unless valid.
HopfAlgebra twist(const HopfAlgebra& h, const TwistElement& t);

/// (n+1)-th Sweedler power of h in H^J through the bracket formula
/// m_{n+2} . (id (x) Delta^J_n (x) id)[(1 (x) J)(1 (x) Delta h)(J^{-1} (x) 1)];
/// n = 0 uses the conventions m_0 = u, Delta^J_0 = eps.
Vec twisted_sweedler_power(const HopfAlgebra& h, const TwistElement& t, const Vec& elem,
                           std::int64_t n);

/// The standard beta-bicharacter twist on the dual group algebra of Z2 x Z2:
/// J = sum beta(g,h) delta_g (x) delta_h with beta((a,b),(c,d)) = (-1)^{ad}.
TwistElement klein_beta_twist(const HopfAlgebra& dual_k4);

struct DrinfeldDouble {
    HopfAlgebra result;   // H^{*cop} (x) H on basis f_u |x| e_a at index u*dim + a
    Matrix embed_h;       // h -> eps |x| h
    Matrix embed_dual;    // f -> f |x| 1
    TensorElem r_matrix;  // canonical R = sum_i (eps |x| e_i) (x) (e^i |x| 1)
};

DrinfeldDouble drinfeld_double(const HopfAlgebra& h);

struct QuasitriangularReport {
    bool r_invertible = false;      // R . (S (x) id)(R) = 1 (x) 1
    bool intertwines = false;       // R Delta(x) = Delta^cop(x) R for all basis x
    bool hexagon_left = false;      // (Delta (x) id)(R) = R13 R23
    bool hexagon_right = false;     // (id (x) Delta)(R) = R13 R12
    bool all() const { return r_invertible && intertwines && hexagon_left && hexagon_right; }
};

QuasitriangularReport quasitriangular_checks(const HopfAlgebra& h, const TensorElem& r);

struct SmashProduct {
    HopfAlgebra result;  // basis e_j |x| S^{2i} at index j*d + i
    std::int64_t d = 1;  // multiplicative order of S^2
    Matrix embed;        // h -> h |x| id
    Vec pivot;           // coordinates of 1 |x| S^2
};

/// The pivotal semidirect product H x| k<S^2>.
SmashProduct smash_s2(const HopfAlgebra& h);

}  // namespace hopfexp
