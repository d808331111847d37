#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hammock/exceptional.hpp"
#include "hammock/laurent.hpp"
#include "hammock/multiset.hpp"
#include "hammock/quiver.hpp"
#include "hammock/yring.hpp"

namespace hammock {

// M = M_{a_1} (x) ... (x) M_{a_r}, arrows of Q-bar
struct StandardSpec {
    Multiset<int> arrows;
};

StandardSpec parse_spec(const ExtendedQuiver &qbar, const std::string &list);
std::string spec_string(const ExtendedQuiver &qbar, const StandardSpec &spec);
// d(M) = sum dim I_{s(a)}
DimVec spec_dvec(const ExtendedQuiver &qbar, const StandardSpec &spec);
// s(a_1), ..., s(a_r) in canonical order
std::vector<int> spec_vertices(const ExtendedQuiver &qbar, const StandardSpec &spec);

struct TiltedObject {
    Multiset<int> tilts;
    std::vector<DimVec> tensor;  // base factors with each tilted P_v replaced by I_v
    bool tilts_fit = true;       // every tilt found an untilted P_v in the base
};

struct ComplexSkeleton {
    std::vector<int> arrows;     // canonical factor order
    std::vector<int> leading;    // x_{s(a)} slots giving the degree-0 class
    std::vector<DimVec> base;    // concatenated pi-bar lists
    std::map<int, std::vector<TiltedObject>> degrees;

    int max_degree() const { return degrees.empty() ? 0 : degrees.rbegin()->first; }
    size_t object_count() const;
};

// tilt records only: T(M) = T(M') + ({i} + T(N))[1]
std::map<int, std::vector<Multiset<int>>> standard_tilts(const ExtendedQuiver &qbar, const StandardSpec &spec);

ComplexSkeleton standard_complex(const ExcFamily &f, const StandardSpec &spec, PiVariant variant = PiVariant::Source);

LaurentPoly leading_monomial(const HeightFunction &xi, const ComplexSkeleton &skel);
LaurentPoly object_class(const HeightFunction &xi, const ComplexSkeleton &skel, const TiltedObject &obj);
// sum (-1)^n [C_n], formal A
LaurentPoly euler_char(const HeightFunction &xi, const ComplexSkeleton &skel);

// chi(M) = chi(M') - F_i A_i^{-1} chi(N), renormalized so chi(empty) = 1
LaurentPoly euler_char_standard(const ExtendedQuiver &qbar, const HeightFunction &xi, const StandardSpec &spec);

// h = sum_k c_k h_{x_k} + d_k h_{tau^-1 x_k}
struct WeightedFn {
    DimVec c;
    DimVec d;
    friend auto operator<=>(const WeightedFn &, const WeightedFn &) = default;
};

std::string weighted_string(const WeightedFn &h);
DimVec omega_weight(const Quiver &q, const WeightedFn &h);
WeightedFn cd_add_tauinv(const WeightedFn &h, int i);
// throws std::domain_error when dominance breaks
WeightedFn cd_subtract_delta(const Quiver &q, const WeightedFn &h, int i);
WeightedFn canonical_cd_for(const Quiver &q, const DimVec &beta);
// every dominant h with c, d bounded entrywise by bound and omega(h) = beta
std::vector<WeightedFn> omega_fiber(const Quiver &q, const DimVec &beta, Int bound);

// sinks of the full subquiver on supp(beta), ascending
std::vector<int> support_sinks(const Quiver &q, const DimVec &beta);

using SinkChooser = std::function<int(const std::vector<int> &sinks)>;
int smallest_sink(const std::vector<int> &sinks);

LaurentPoly simple_complex_char(const Quiver &q, const HeightFunction &xi, const WeightedFn &h,
                                const SinkChooser &choose = smallest_sink);
// distinct values over every sequence of sink choices
std::set<LaurentPoly> simple_complex_char_all(const Quiver &q, const HeightFunction &xi, const WeightedFn &h);

// A_i^{-1} -> yh_i
LaurentPoly a_to_yhat(const LaurentPoly &p);

std::string render_dot(const Quiver &q, const HeightFunction &xi, const ComplexSkeleton &skel);

}  // namespace hammock
