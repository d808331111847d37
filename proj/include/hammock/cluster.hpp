#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hammock/complexes.hpp"
#include "hammock/laurent.hpp"
#include "hammock/quiver.hpp"

namespace hammock {

// principal coefficients: rows 0..n-1 mutable, rows n..2n-1 frozen
struct Seed {
    int n = 0;
    std::vector<std::vector<Int>> b;  // 2n x n
    std::vector<LaurentPoly> x;       // cluster variables in u_i and y_i
};

// b_{ab} = #(b -> a) - #(a -> b)
Seed initial_seed(const Quiver &q);
Seed mutate(const Seed &s, int k);
std::string seed_key(const Seed &s);

struct ClusterVariable {
    LaurentPoly expr;
    DimVec denominator;
    LaurentPoly F;           // in yh_i
    std::vector<Int> g;      // exponent of the coefficient-free term
};

struct FiniteTypeTable {
    std::vector<LaurentPoly> variables;               // every distinct cluster variable
    std::map<DimVec, ClusterVariable> by_denominator;  // non-initial ones
    size_t seeds = 0;
    bool laurent_ok = true;  // every variable a Laurent polynomial with polynomial coefficients
};

// breadth-first closure; throws when more than max_seeds seeds show up
FiniteTypeTable enumerate_finite_type(const Quiver &q, size_t max_seeds = 100000);

DimVec denominator_vector(const Quiver &q, const LaurentPoly &x);
LaurentPoly f_polynomial(const LaurentPoly &x);
std::vector<Int> g_vector(const Quiver &q, const LaurentPoly &x);

// F[beta] = F[beta - dim I_i^beta] + yh_i F[beta - alpha_i], i a sink of Q_beta;
// disconnected 0/1 vectors factor over their components
LaurentPoly fpoly_recursion(const Quiver &q, const DimVec &beta, const SinkChooser &choose = smallest_sink);
std::set<LaurentPoly> fpoly_recursion_all(const Quiver &q, const DimVec &beta);

// dim I_i^beta, the injective of the full subquiver on supp(beta), as a vector on q
DimVec injective_in_support(const Quiver &q, const DimVec &beta, int i);
std::vector<DimVec> support_components(const Quiver &q, const DimVec &beta);

// positive roots of a type A quiver: connected 0/1 intervals
std::vector<DimVec> type_a_positive_roots(const Quiver &q);

struct SimpleCharResult {
    bool ok = true;
    LaurentPoly euler;   // simple_complex_char after F := fspec, A^{-1} -> yh
    LaurentPoly oracle;  // F[beta]
    std::string diff;
};
SimpleCharResult compare_simple_character(const Quiver &q, const HeightFunction &xi, const DimVec &beta, const LaurentPoly &oracle,
                          Int fspec = -1);

// exchange instance at y = 1: u[beta] u_i - prod_{i->j} u_j u[beta - alpha_i] must be a monomial in
// the initial variables times u[beta - dim I_i^beta]; u[.] of a disconnected vector is the product
// over components
CheckResult check_exchange(const Quiver &q, const FiniteTypeTable &t, const DimVec &beta, int sink);

}  // namespace hammock
