#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hammock/multiset.hpp"
#include "hammock/quiver.hpp"

namespace hammock {

// vertex (i, m) of ZQ; arrows (i,m)->(j,m) and (j,m)->(i,m+1) for i->j
struct ZQVertex {
    int v = 0;
    Int m = 0;
    friend auto operator<=>(const ZQVertex &, const ZQVertex &) = default;
};

std::string zq_string(const Quiver &q, const ZQVertex &z);

struct DynkinComponent {
    char family = 'A';  // A, D, E
    int rank = 0;
};
// one entry per connected component, nullopt when some component is not ADE
std::optional<std::vector<DynkinComponent>> dynkin_type(const Quiver &q);
bool is_dynkin(const Quiver &q);
std::string dynkin_string(const Quiver &q);

class ZQ {
public:
    explicit ZQ(Quiver q);

    const Quiver &quiver() const { return q_; }
    std::vector<ZQVertex> successors(const ZQVertex &z) const;
    std::vector<ZQVertex> predecessors(const ZQVertex &z) const;
    static ZQVertex tau(const ZQVertex &z) { return {z.v, z.m - 1}; }
    static ZQVertex tau_inv(const ZQVertex &z) { return {z.v, z.m + 1}; }

    // forward arrows cost 0, backward arrows cost 1; -1 across components
    Int dist(int i, int j) const { return dist_.at(i).at(j); }
    std::vector<ZQVertex> source_slice(const ZQVertex &x) const;
    // there is a path a ~> b
    bool reaches(const ZQVertex &a, const ZQVertex &b) const;

    // hammock function h_x at y, memoized (h_x only depends on y - x)
    Int h(const ZQVertex &x, const ZQVertex &y) const;

private:
    Int h_rel(int i, int j, Int d) const;

    Quiver q_;
    std::vector<std::vector<Int>> dist_;
    std::vector<int> comp_size_;
    mutable std::map<std::tuple<int, int, Int>, Int> memo_;
};

// h = sum_z defect(z) h_z; defect is the finitely supported h-tilde
struct QuasiAddFn {
    std::map<ZQVertex, Int> defect;

    Int operator()(const ZQ &zq, const ZQVertex &y) const;
    // values on a section given by one slot per vertex
    std::vector<Int> slice_values(const ZQ &zq, const std::vector<Int> &slots) const;
    void add_hammock(const ZQVertex &x, Int k = 1);
    // subtract delta_y, i.e. delta-tilde_y = delta_y + delta_{tau^-1 y} - sum_{y->z} delta_z
    void subtract_delta(const ZQ &zq, const ZQVertex &y, Int k = 1);
    bool dominant() const;
    friend bool operator==(const QuasiAddFn &, const QuasiAddFn &) = default;
};

QuasiAddFn knit_hammock_fn(const ZQVertex &x);
QuasiAddFn delta_fn(const ZQ &zq, const ZQVertex &y);

// Dynkin AR data of D^b(kQ) laid on ZQ
class StripTable {
public:
    explicit StripTable(const Quiver &q);

    const ZQ &zq() const { return *zq_; }
    const Quiver &quiver() const { return zq_->quiver(); }
    const HeightFunction &height() const { return xi_; }

    ZQVertex projective(int i) const { return {i, xi_.xi[i]}; }
    ZQVertex injective(int i) const { return inj_.at(i); }
    ZQVertex serre(const ZQVertex &z) const;
    ZQVertex shift(const ZQVertex &z, Int k = 1) const;

    struct Label {
        Int shift = 0;
        DimVec dim;
    };
    Label label(const ZQVertex &z) const;
    std::string label_string(const ZQVertex &z) const;
    std::optional<ZQVertex> vertex_of(const DimVec &module) const;
    // indecomposable modules as ZQ vertices of the fundamental domain
    const std::map<DimVec, ZQVertex> &modules() const { return modules_; }

    // Hom(x, y) via the hammock function on the interval x ~> y ~> Sx
    Int hom_dim(const ZQVertex &x, const ZQVertex &y) const;
    Multiset<ZQVertex> hammock_multiset(const ZQVertex &x) const;
    // (i, p) labels: p = 2m - xi(i)
    std::pair<int, Int> ip_label(const ZQVertex &z) const { return {z.v, 2 * z.m - xi_.xi[z.v]}; }
    ZQVertex from_ip(int i, Int p) const;

private:
    DimVec knit_dim(int j, Int layer) const;

    std::shared_ptr<ZQ> zq_;
    HeightFunction xi_;
    std::vector<ZQVertex> inj_;
    std::vector<int> inj_on_orbit_;  // vertex i with I_i on orbit j
    std::map<DimVec, ZQVertex> modules_;
    mutable std::map<std::pair<int, Int>, DimVec> dims_;
};

struct HammockObject {
    Multiset<ZQVertex> X;
    QuasiAddFn h;
};

HammockObject fundamental_object(const StripTable &st, const ZQVertex &x);
// mu_Y: X - Y + S(Y), h - sum_{y in Y} delta_y
HammockObject serre_tilt(const StripTable &st, const HammockObject &obj, const Multiset<ZQVertex> &Y);
Multiset<ZQVertex> dominant_from_fn(const StripTable &st, const QuasiAddFn &h);

struct CheckResult {
    bool ok = true;
    std::string detail;
};

// h_x + h_{tau^-1 x} = delta_x + sum_{x->y} h_y on the given vertices
CheckResult check_mesh_identity(const ZQ &zq, const ZQVertex &x, const std::vector<ZQVertex> &window);
// H(x) + H(tau^-1 x) = {x, Sigma x} + sum_{x->z} H(z)
CheckResult check_hammock_mesh(const StripTable &st, const ZQVertex &x);

// all (i, m) with lo <= m - base(i) <= hi
std::vector<ZQVertex> window(const Quiver &q, const std::vector<Int> &base, Int lo, Int hi);

}  // namespace hammock
