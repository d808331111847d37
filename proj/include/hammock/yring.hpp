#pragma once

#include <string>
#include <vector>

#include "hammock/laurent.hpp"
#include "hammock/multiset.hpp"
#include "hammock/quiver.hpp"
#include "hammock/zq.hpp"

namespace hammock {

// A_{i,p} = Y_{i,p-1} Y_{i,p+1} prod_{j~i} Y_{j,p}^{-1}
Monomial a_monomial(const Quiver &q, int i, Int p);

// formal A_i := A_{i, xi(i)+1}, the factor attached to a tilt at x_i
Var a_var(const HeightFunction &xi, int i);
LaurentPoly a_inv(const HeightFunction &xi, int i);

// replaces every formal A variable by its Y-monomial
LaurentPoly expand_a(const Quiver &q, const LaurentPoly &p);

// Y_{i,p} label of a ZQ vertex: p = 2m - xi(i), so x_i = (i, xi(i)) carries Y_{i,xi(i)}
Int y_index(const HeightFunction &xi, const ZQVertex &z);
LaurentPoly y_of(const HeightFunction &xi, const ZQVertex &z);
// Y_{x_i}
LaurentPoly y_slot(const HeightFunction &xi, int i);

// phi_i = 1 + A_i^{-1} prod_{j->i} phi_j, in the formal A variables
std::vector<LaurentPoly> fundamental_truncs(const Quiver &q, const HeightFunction &xi);
LaurentPoly fundamental_trunc(const Quiver &q, const HeightFunction &xi, int i);
// Y_{i,xi(i)} phi_i with A expanded
LaurentPoly fundamental_character(const Quiver &q, const HeightFunction &xi, int i);

// prod_l phi_{v_l} (formal A) and the same times the leading monomial, expanded
LaurentPoly standard_trunc_renormalized(const Quiver &q, const HeightFunction &xi, const std::vector<int> &vertices);
LaurentPoly standard_trunc(const Quiver &q, const HeightFunction &xi, const std::vector<int> &vertices);

// prod Y_z * prod_{v in tilts} F_v A_v^{-1}, A kept formal
LaurentPoly tilt_class(const HeightFunction &xi, const std::vector<ZQVertex> &base, const Multiset<int> &tilts);

LaurentPoly specialize_F(const LaurentPoly &p, Int value);

struct TSystemReport {
    bool ok = true;
    std::vector<int> failed;  // vertices where the identity breaks
    std::string detail;
};
TSystemReport check_tsystem(const Quiver &q, const HeightFunction &xi);

}  // namespace hammock
