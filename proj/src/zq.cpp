#include "hammock/zq.hpp"

#include <algorithm>
#include <deque>

namespace hammock {

namespace {

Int add_checked(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("hammock function value overflow");
    return r;
}

Int mul_checked(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("hammock function value overflow");
    return r;
}

}  // namespace

std::string zq_string(const Quiver &q, const ZQVertex &z) {
    return "(" + q.name(z.v) + "," + std::to_string(z.m) + ")";
}

std::optional<std::vector<DynkinComponent>> dynkin_type(const Quiver &q) {
    const int n = q.size();
    int ncomp = 0;
    for (int c : q.components()) ncomp = std::max(ncomp, c + 1);
    std::vector<DynkinComponent> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (q.components()[v] == c) vs.push_back(v);
        int edges = 0;
        for (auto &a : q.arrows())
            if (q.components()[a.source] == c) ++edges;
        if (edges != static_cast<int>(vs.size()) - 1) return std::nullopt;
        std::vector<int> branch;
        for (int v : vs) {
            auto d = q.neighbours(v).size();
            if (d > 3) return std::nullopt;
            if (d == 3) branch.push_back(v);
        }
        int r = static_cast<int>(vs.size());
        if (branch.empty()) {
            out.push_back({'A', r});
            continue;
        }
        if (branch.size() > 1) return std::nullopt;
        std::vector<int> legs;
        for (int w : q.neighbours(branch[0])) {
            int len = 1, prev = branch[0], cur = w;
            while (true) {
                int next = -1;
                for (int u : q.neighbours(cur))
                    if (u != prev) next = u;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            legs.push_back(len);
        }
        std::sort(legs.begin(), legs.end());
        if (legs[0] == 1 && legs[1] == 1)
            out.push_back({'D', r});
        else if (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4)
            out.push_back({'E', r});
        else
            return std::nullopt;
    }
    return out;
}

bool is_dynkin(const Quiver &q) { return dynkin_type(q).has_value(); }

std::string dynkin_string(const Quiver &q) {
    auto t = dynkin_type(q);
    if (!t) return "wild-or-affine";
    std::string s;
    for (auto &c : *t) {
        if (!s.empty()) s += "+";
        s += c.family + std::to_string(c.rank);
    }
    return s;
}

ZQ::ZQ(Quiver q) : q_(std::move(q)) {
    const int n = q_.size();
    dist_.assign(n, std::vector<Int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto &d = dist_[s];
        std::deque<int> dq{s};
        std::vector<Int> best(n, -1);
        best[s] = 0;
        while (!dq.empty()) {
            int v = dq.front();
            dq.pop_front();
            for (int w : q_.out(v))
                if (best[w] < 0 || best[w] > best[v]) {
                    best[w] = best[v];
                    dq.push_front(w);
                }
            for (int w : q_.in(v))
                if (best[w] < 0 || best[w] > best[v] + 1) {
                    best[w] = best[v] + 1;
                    dq.push_back(w);
                }
        }
        d = best;
    }
    comp_size_.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (q_.components()[v] == q_.components()[w]) ++comp_size_[v];
}

std::vector<ZQVertex> ZQ::successors(const ZQVertex &z) const {
    std::vector<ZQVertex> r;
    for (int j : q_.out(z.v)) r.push_back({j, z.m});
    for (int i : q_.in(z.v)) r.push_back({i, z.m + 1});
    return r;
}

std::vector<ZQVertex> ZQ::predecessors(const ZQVertex &z) const {
    std::vector<ZQVertex> r;
    for (int i : q_.in(z.v)) r.push_back({i, z.m});
    for (int j : q_.out(z.v)) r.push_back({j, z.m - 1});
    return r;
}

std::vector<ZQVertex> ZQ::source_slice(const ZQVertex &x) const {
    std::vector<ZQVertex> r;
    for (int j = 0; j < q_.size(); ++j)
        if (dist(x.v, j) >= 0) r.push_back({j, x.m + dist(x.v, j)});
    return r;
}

bool ZQ::reaches(const ZQVertex &a, const ZQVertex &b) const {
    Int d = dist(a.v, b.v);
    if (d < 0) return false;
    if (b.m == a.m + d) return true;
    return b.m > a.m + d && comp_size_[a.v] > 1;
}

Int ZQ::h(const ZQVertex &x, const ZQVertex &y) const { return h_rel(x.v, y.v, y.m - x.m); }

// x = (i, 0); h_x vanishes up to the section one step before the source slice
Int ZQ::h_rel(int i, int j, Int d) const {
    Int dj = dist(i, j);
    if (dj < 0 || d < dj) return 0;
    auto key = std::make_tuple(i, j, d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Int val = (j == i && d == 0) ? 1 : 0;
    for (int a : q_.in(j)) val = add_checked(val, h_rel(i, a, d));
    for (int b : q_.out(j)) val = add_checked(val, h_rel(i, b, d - 1));
    val = add_checked(val, -h_rel(i, j, d - 1));
    memo_.emplace(key, val);
    return val;
}

Int QuasiAddFn::operator()(const ZQ &zq, const ZQVertex &y) const {
    Int s = 0;
    for (auto &[z, c] : defect) s = add_checked(s, mul_checked(c, zq.h(z, y)));
    return s;
}

std::vector<Int> QuasiAddFn::slice_values(const ZQ &zq, const std::vector<Int> &slots) const {
    std::vector<Int> r;
    for (int j = 0; j < static_cast<int>(slots.size()); ++j) r.push_back((*this)(zq, {j, slots[j]}));
    return r;
}

void QuasiAddFn::add_hammock(const ZQVertex &x, Int k) {
    Int &c = defect[x];
    c += k;
    if (c == 0) defect.erase(x);
}

void QuasiAddFn::subtract_delta(const ZQ &zq, const ZQVertex &y, Int k) {
    add_hammock(y, -k);
    add_hammock(ZQ::tau_inv(y), -k);
    for (auto &z : zq.successors(y)) add_hammock(z, k);
}

bool QuasiAddFn::dominant() const {
    return std::all_of(defect.begin(), defect.end(), [](auto &p) { return p.second >= 0; });
}

QuasiAddFn knit_hammock_fn(const ZQVertex &x) {
    QuasiAddFn f;
    f.add_hammock(x);
    return f;
}

QuasiAddFn delta_fn(const ZQ &zq, const ZQVertex &y) {
    QuasiAddFn f;
    f.subtract_delta(zq, y, -1);
    return f;
}

StripTable::StripTable(const Quiver &q) {
    if (!is_dynkin(q))
        throw QuiverError(QuiverError::Kind::NotDynkin, "quiver is not of Dynkin type (" + dynkin_string(q) + ")");
    zq_ = std::make_shared<ZQ>(q);
    xi_ = effective_height(q);
    const int n = q.size();

    std::vector<DimVec> idims;
    for (int i = 0; i < n; ++i) idims.push_back(injective_dim(q, i));
    inj_.assign(n, {-1, 0});
    inj_on_orbit_.assign(n, -1);
    const Int limit = 4 * n + 32;
    for (int j = 0; j < n; ++j) {
        for (Int k = 0; k <= limit && inj_on_orbit_[j] < 0; ++k) {
            DimVec d = knit_dim(j, k);
            modules_.emplace(d, ZQVertex{j, xi_.xi[j] + k});
            for (int i = 0; i < n; ++i)
                if (d == idims[i]) {
                    inj_[i] = {j, xi_.xi[j] + k};
                    inj_on_orbit_[j] = i;
                    break;
                }
        }
        if (inj_on_orbit_[j] < 0) throw std::logic_error("injective not found while knitting");
    }
    for (auto &[d, z] : modules_)
        if (!nonneg(d)) throw std::logic_error("negative dimension inside the module strip");
}

DimVec StripTable::knit_dim(int j, Int layer) const {
    if (layer < 0) throw std::logic_error("knit_dim below the projective slice");
    auto key = std::make_pair(j, layer);
    if (auto it = dims_.find(key); it != dims_.end()) return it->second;
    const Quiver &q = quiver();
    DimVec d;
    if (layer == 0) {
        d = projective_dim(q, j);
    } else {
        d = zero_vec(q);
        for (int a : q.in(j)) d = d + knit_dim(a, layer - 1);
        for (int b : q.out(j)) d = d + knit_dim(b, layer);
        d = d - knit_dim(j, layer - 1);
    }
    dims_.emplace(key, d);
    return d;
}

ZQVertex StripTable::serre(const ZQVertex &z) const {
    const ZQVertex &I = inj_.at(z.v);
    return {I.v, I.m + (z.m - xi_.xi[z.v])};
}

ZQVertex StripTable::shift(const ZQVertex &z0, Int k) const {
    ZQVertex z = z0;
    for (; k > 0; --k) z = ZQ::tau_inv(serre(z));
    for (; k < 0; ++k) {
        int i = inj_on_orbit_.at(z.v);
        Int s = z.m - inj_[i].m - 1;
        z = {i, xi_.xi[i] + s};
    }
    return z;
}

StripTable::Label StripTable::label(const ZQVertex &z0) const {
    ZQVertex z = z0;
    Int k = 0;
    while (true) {
        Int end = inj_[inj_on_orbit_[z.v]].m;
        if (z.m > end) {
            z = shift(z, -1);
            ++k;
        } else if (z.m < xi_.xi[z.v]) {
            z = shift(z, 1);
            --k;
        } else {
            break;
        }
    }
    return {k, knit_dim(z.v, z.m - xi_.xi[z.v])};
}

std::string StripTable::label_string(const ZQVertex &z) const {
    Label l = label(z);
    const Quiver &q = quiver();
    std::string s;
    for (int i = 0; i < q.size() && s.empty(); ++i)
        if (l.dim == projective_dim(q, i)) s = "P" + q.name(i);
    for (int i = 0; i < q.size() && s.empty(); ++i)
        if (l.dim == injective_dim(q, i)) s = "I" + q.name(i);
    if (s.empty()) s = dim_string(l.dim);
    if (l.shift != 0) s += "[" + std::to_string(l.shift) + "]";
    return s;
}

std::optional<ZQVertex> StripTable::vertex_of(const DimVec &module) const {
    auto it = modules_.find(module);
    if (it == modules_.end()) return std::nullopt;
    return it->second;
}

ZQVertex StripTable::from_ip(int i, Int p) const {
    Int twice = p + xi_.xi.at(i);
    if (twice % 2 != 0)
        throw QuiverError(QuiverError::Kind::Height, "label (i,p) has the wrong parity for vertex " + quiver().name(i));
    return {i, twice / 2};
}

Int StripTable::hom_dim(const ZQVertex &x, const ZQVertex &y) const {
    if (!zq_->reaches(x, y) || !zq_->reaches(y, serre(x))) return 0;
    return zq_->h(x, y);
}

Multiset<ZQVertex> StripTable::hammock_multiset(const ZQVertex &x) const {
    Multiset<ZQVertex> H;
    ZQVertex sx = serre(x);
    for (int j = 0; j < quiver().size(); ++j) {
        Int d = zq_->dist(x.v, j);
        if (d < 0) continue;
        for (Int m = x.m + d; m <= sx.m; ++m) {
            ZQVertex y{j, m};
            if (!zq_->reaches(y, sx)) continue;
            Int v = zq_->h(x, y);
            if (v < 0) throw std::logic_error("negative hammock value inside the interval");
            H.add(y, v);
        }
    }
    return H;
}

HammockObject fundamental_object(const StripTable &st, const ZQVertex &x) {
    return {st.hammock_multiset(x), knit_hammock_fn(x)};
}

HammockObject serre_tilt(const StripTable &st, const HammockObject &obj, const Multiset<ZQVertex> &Y) {
    if (!obj.X.contains(Y)) throw std::invalid_argument("tilted vertices are not contained in the multiset");
    HammockObject r = obj;
    for (auto &[y, c] : Y.counts()) {
        r.X.remove(y, c);
        r.X.add(st.serre(y), c);
        r.h.subtract_delta(st.zq(), y, c);
    }
    return r;
}

Multiset<ZQVertex> dominant_from_fn(const StripTable &st, const QuasiAddFn &h) {
    Multiset<ZQVertex> X;
    for (auto &[z, c] : h.defect) {
        if (c < 0) throw std::invalid_argument("function is not dominant at " + zq_string(st.quiver(), z));
        auto H = st.hammock_multiset(z);
        for (Int k = 0; k < c; ++k) X += H;
    }
    return X;
}

CheckResult check_mesh_identity(const ZQ &zq, const ZQVertex &x, const std::vector<ZQVertex> &win) {
    for (auto &y : win) {
        Int lhs = zq.h(x, y) + zq.h(ZQ::tau_inv(x), y);
        Int rhs = (y == x) ? 1 : 0;
        for (auto &z : zq.successors(x)) rhs += zq.h(z, y);
        if (lhs != rhs)
            return {false, "mesh identity fails for x=" + zq_string(zq.quiver(), x) + " at " +
                               zq_string(zq.quiver(), y) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs)};
    }
    return {};
}

CheckResult check_hammock_mesh(const StripTable &st, const ZQVertex &x) {
    auto lhs = st.hammock_multiset(x) + st.hammock_multiset(ZQ::tau_inv(x));
    Multiset<ZQVertex> rhs{x, st.shift(x, 1)};
    for (auto &z : st.zq().successors(x)) rhs += st.hammock_multiset(z);
    if (lhs == rhs) return {};
    return {false, "hammock mesh identity fails at " + zq_string(st.quiver(), x)};
}

std::vector<ZQVertex> window(const Quiver &q, const std::vector<Int> &base, Int lo, Int hi) {
    std::vector<ZQVertex> r;
    for (int j = 0; j < q.size(); ++j)
        for (Int k = lo; k <= hi; ++k) r.push_back({j, base.at(j) + k});
    return r;
}

}  // namespace hammock
