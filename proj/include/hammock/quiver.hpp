#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hammock {

using Int = long long;
using DimVec = std::vector<Int>;

class QuiverError : public std::runtime_error {
public:
    enum class Kind { Parse, Cycle, MultipleEdge, UnknownVertex, Mismatch, NotRoot, Height, NotDynkin };

    QuiverError(Kind k, const std::string &msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct Arrow {
    int source = 0;
    int target = 0;
};

// xi(j) = xi(i) - 1 for every arrow i -> j
struct HeightFunction {
    std::vector<Int> xi;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> names, std::vector<Arrow> arrows);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string> &names() const { return names_; }
    const std::string &name(int v) const { return names_.at(v); }
    int index(const std::string &name) const;
    std::optional<int> find(const std::string &name) const;

    const std::vector<Arrow> &arrows() const { return arrows_; }
    const std::vector<int> &out(int v) const { return out_.at(v); }
    const std::vector<int> &in(int v) const { return in_.at(v); }
    bool has_arrow(int i, int j) const;
    std::vector<int> neighbours(int v) const;

    bool is_sink(int v) const { return out_.at(v).empty(); }
    bool is_source(int v) const { return in_.at(v).empty(); }
    std::vector<int> sinks() const;
    std::vector<int> sources() const;

    // Kahn order, sources first, ties broken by declaration index
    const std::vector<int> &topological_order() const { return topo_; }
    // number of paths i -> j, lazy path counted once
    Int paths(int i, int j) const { return paths_.at(i).at(j); }

    // connected component id per vertex, ids in order of first vertex
    const std::vector<int> &components() const { return comp_; }

    const std::optional<HeightFunction> &declared_height() const { return height_; }
    void set_declared_height(HeightFunction h);

private:
    std::vector<std::string> names_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> topo_;
    std::vector<std::vector<Int>> paths_;
    std::vector<int> comp_;
    std::optional<HeightFunction> height_;
};

// text: "1->2, 3->2" (commas or newlines), optional "vertices: a b c" and
// "height: a=0 b=-1" lines, '#' comments. JSON when the first char is '{'.
Quiver load_quiver(const std::string &text);
Quiver load_quiver_file(const std::string &path);

DimVec zero_vec(const Quiver &q);
DimVec alpha(const Quiver &q, int i);
DimVec projective_dim(const Quiver &q, int i);
DimVec injective_dim(const Quiver &q, int i);

Int euler_form(const Quiver &q, const DimVec &a, const DimVec &b);
Int symmetric_form(const Quiver &q, const DimVec &a, const DimVec &b);
DimVec reflect(const Quiver &q, const DimVec &beta, const DimVec &v);
bool is_real_root(const Quiver &q, const DimVec &v);

struct Subquiver {
    Quiver quiver;
    std::vector<int> vertices;  // parent index of each subquiver vertex
    std::vector<int> sinks;     // parent indices
    std::vector<int> sources;
};
Subquiver support_subquiver(const Quiver &q, const DimVec &beta);
// full subquiver on the given parent vertices, in the given order
Subquiver full_subquiver(const Quiver &q, const std::vector<int> &vertices);

// normalized per component: 0 at the first vertex of each component
std::optional<HeightFunction> height_function(const Quiver &q);
// declared height if present, else normalized; throws Height when none exists
HeightFunction effective_height(const Quiver &q);

inline constexpr int kStar = -1;

struct BarArrow {
    int source = 0;
    int target = kStar;
    bool is_star() const { return target == kStar; }
};

// Q-bar: arrows of Q in declaration order, then one i -> * per sink i
class ExtendedQuiver {
public:
    explicit ExtendedQuiver(const Quiver &q);
    const Quiver &base() const { return q_; }
    const std::vector<BarArrow> &arrows() const { return arrows_; }
    int size() const { return static_cast<int>(arrows_.size()); }
    std::string arrow_name(int a) const;
    int parse_arrow(const std::string &s) const;
    std::vector<int> out(int v) const;
    // arrows ending at v; v == kStar gives all star arrows
    std::vector<int> in(int v) const;
    // every path ending at v, as arrow indices in order; the lazy path excluded
    std::vector<std::vector<int>> in_paths(int v) const;
    int star_of(int v) const;

private:
    Quiver q_;
    std::vector<BarArrow> arrows_;
};

std::string dim_string(const DimVec &v);
DimVec parse_dim(const Quiver &q, const std::string &csv);
DimVec operator+(const DimVec &a, const DimVec &b);
DimVec operator-(const DimVec &a, const DimVec &b);
DimVec operator*(Int k, const DimVec &a);
bool nonneg(const DimVec &a);
bool is_zero(const DimVec &a);
Int total(const DimVec &a);

}  // namespace hammock
