#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hammock/multiset.hpp"
#include "hammock/quiver.hpp"
#include "hammock/zq.hpp"

namespace hammock {

using ExcSequence = std::vector<DimVec>;

struct ExcStage {
    int source = 0;               // vertex deleted at this stage
    std::vector<int> positions;   // k_1 > ... > k_r, 0-based
    std::vector<DimVec> betas;    // beta_0 .. beta_r
    int t_offset = 0;
    std::vector<int> alive;       // vertices of the subquiver, in position order
};

struct ExcFamily {
    Quiver q;
    ExtendedQuiver qbar;
    std::vector<int> position_vertex;  // x_l^(0) = P_v
    std::vector<int> vertex_position;
    std::vector<ExcSequence> seq;      // seq[t][position]
    std::vector<int> t;                // per Q-bar arrow; star arrows get m
    std::vector<ExcStage> stages;

    int m() const { return static_cast<int>(seq.size()) - 1; }
    int n() const { return q.size(); }
    // row of vertex v at column t
    const DimVec &x(int v, int col) const { return seq.at(col).at(vertex_position.at(v)); }
};

ExcSequence initial_projective_sequence(const Quiver &q);
ExcFamily build_family(const Quiver &q);
// order[l] = vertex whose projective sits at position l; targets must precede sources
ExcFamily build_family(const Quiver &q, const std::vector<int> &order);

enum class Braid {
    Right,  // sigma_k:      (A, B) -> (B, A - <A,B> B)
    Left,   // sigma_k^{-1}: (A, B) -> (B - <A,B> A, A)
};
// k is 1-based: acts on positions k, k+1
ExcSequence braid_sigma(const Quiver &q, const ExcSequence &seq, int k, Braid dir);
// the composite taking E^(t) to E^(t+1) inside the first stage
ExcSequence stage_step_by_braids(const Quiver &q, const ExcSequence &seq, int k_next);

std::string entry_label(const Quiver &q, const DimVec &v);

// distinct entries of row i in columns s <= t (resp. s < t), in order of appearance
std::vector<DimVec> pi_upto(const ExcFamily &f, int i, int t);
std::vector<DimVec> pi_below(const ExcFamily &f, int i, int t);
// all columns 0..m
std::vector<DimVec> pi_all(const ExcFamily &f, int i);

enum class PiVariant { Source, Target };

Multiset<DimVec> pibar(const ExcFamily &f, int arrow, PiVariant variant = PiVariant::Source);
// same entries in construction order: the row part first, then the in-path parts
std::vector<DimVec> pibar_list(const ExcFamily &f, int arrow, PiVariant variant = PiVariant::Source);
// pi_{s(a)} + sum over in-paths, the middle term of the inclusion chain
Multiset<DimVec> pibar_envelope(const ExcFamily &f, int arrow);
// Z_gamma: P_j repeated gamma_j times
Multiset<DimVec> z_projectives(const Quiver &q, const DimVec &gamma);
Multiset<DimVec> projective_part(const Quiver &q, const Multiset<DimVec> &ms);

struct PropertyResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct FamilyReport {
    std::vector<PropertyResult> results;
    bool ok() const;
    const PropertyResult *find(const std::string &name) const;
};

FamilyReport verify_family(const ExcFamily &f);

struct Decomposition {
    Multiset<DimVec> Z;
    Multiset<int> arrows;
};

class DecompositionError : public std::runtime_error {
public:
    DecompositionError(const std::string &msg, Multiset<DimVec> residual)
        : std::runtime_error(msg), residual_(std::move(residual)) {}
    const Multiset<DimVec> &residual() const { return residual_; }

private:
    Multiset<DimVec> residual_;
};

Multiset<DimVec> compose_dominant(const ExcFamily &f, const Multiset<DimVec> &Z, const Multiset<int> &arrows);
Decomposition decompose_dominant(const ExcFamily &f, const Multiset<DimVec> &ms);
// number of decompositions found, stopping at limit
int count_decompositions(const ExcFamily &f, const Multiset<DimVec> &ms, int limit = 2);

}  // namespace hammock
