#pragma once

#include "hammock/quiver.hpp"
#include "hammock/zq.hpp"

namespace hammock {

// thin module: 0/1 dimension vector with connected support, identity maps
bool is_thin(const Quiver &q, const DimVec &m);

// dim Hom(M, N) for thin modules over a tree quiver, by solving the
// intertwiner equations exactly; throws std::invalid_argument otherwise
Int brute_force_hom(const Quiver &q, const DimVec &m, const DimVec &n);
Int brute_force_ext(const Quiver &q, const DimVec &m, const DimVec &n);

// dim Hom between indecomposables of a Dynkin quiver: brute force when both
// are thin, otherwise max(0, <m,n>) (directedness)
Int module_hom(const Quiver &q, const DimVec &m, const DimVec &n);
Int module_ext(const Quiver &q, const DimVec &m, const DimVec &n);

// Hom(Sigma^a M, Sigma^b N) in D^b(kQ): Hom if b = a, Ext if b = a + 1, else 0
Int derived_hom(const StripTable &st, const ZQVertex &x, const ZQVertex &y);

}  // namespace hammock
