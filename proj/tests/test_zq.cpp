#include <gtest/gtest.h>

#include <random>

#include "hammock/hom_oracle.hpp"
#include "hammock/sweep.hpp"
#include "hammock/zq.hpp"
#include "oracles.hpp"

using namespace hammock;

namespace {

std::vector<Quiver> dynkin_sample() {
    std::vector<Quiver> qs;
    for (int n = 1; n <= 5; ++n)
        for (auto &q : type_a_quivers(n)) qs.push_back(q);
    for (auto &q : type_d_quivers(4)) qs.push_back(q);
    for (auto &q : type_d_quivers(5)) qs.push_back(q);
    return qs;
}

// every vertex with m in [lo, hi] around the projective slice
std::vector<ZQVertex> around(const StripTable &st, Int lo, Int hi) {
    std::vector<Int> base(st.quiver().size());
    for (int i = 0; i < st.quiver().size(); ++i) base[i] = st.projective(i).m;
    return window(st.quiver(), base, lo, hi);
}

}  // namespace

TEST(Hammock, A4GridPrintedValues) {
    Quiver q = load_quiver("1->2,2->3,4->3");
    ZQ zq(q);
    const ZQVertex x{q.index("3"), 0};
    // rows are vertices 1..4, columns the printed layers
    struct Row {
        Int m0;
        std::vector<Int> vals;
    };
    std::vector<Row> printed{{1, {0, 1, 0, -1}}, {0, {0, 1, 1, -1}}, {-1, {0, 1, 1, 0}}, {0, {0, 1, 0, 0}}};
    for (int v = 0; v < 4; ++v)
        for (size_t k = 0; k < printed[v].vals.size(); ++k)
            EXPECT_EQ(zq.h(x, {v, printed[v].m0 + static_cast<Int>(k)}), printed[v].vals[k]) << "vertex " << v + 1;
}

TEST(Hammock, A4GridFrozen) {
    Quiver q = load_quiver("1->2,2->3,4->3");
    ZQ zq(q);
    const ZQVertex x{q.index("3"), 0};
    std::vector<std::vector<Int>> grid{
        {0, 0, 0, 1, 0, -1, 0, 0},
        {0, 0, 1, 1, -1, -1, 0, 1},
        {0, 1, 1, 0, -1, -1, 1, 1},
        {0, 0, 1, 0, 0, -1, 0, 1},
    };
    for (int v = 0; v < 4; ++v)
        for (Int m = -1; m <= 6; ++m) EXPECT_EQ(zq.h(x, {v, m}), grid[v][m + 1]) << v << "," << m;

    auto slice = zq.source_slice(x);
    EXPECT_EQ(slice.size(), 4u);
    for (auto &y : slice) EXPECT_EQ(zq.h(x, y), 1);
    EXPECT_NE(std::find(slice.begin(), slice.end(), x), slice.end());
}

TEST(Hammock, KnitOracleAgrees) {
    std::vector<Quiver> qs = dynkin_sample();
    qs.push_back(load_quiver("1->5,2->5,3->5,4->5"));
    qs.push_back(load_quiver("1->2,1->3,2->4,3->4"));
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) qs.push_back(random_acyclic_quiver(rng, 5, 0.5));
    for (auto &q : qs) {
        ZQ zq(q);
        for (int i = 0; i < q.size(); ++i) {
            const ZQVertex x{i, 0};
            auto ref = oracle::knit(q, x, 8);
            for (auto &[y, val] : ref) {
                if (y.m < -2) continue;
                EXPECT_EQ(zq.h(x, y), val) << quiver_string(q) << " at " << zq_string(q, y);
            }
        }
    }
}

TEST(Hammock, A1) {
    Quiver q = load_quiver("vertices: 1");
    ZQ zq(q);
    EXPECT_EQ(zq.source_slice({0, 0}).size(), 1u);
    EXPECT_EQ(zq.h({0, 0}, {0, 0}), 1);
    EXPECT_EQ(zq.h({0, 0}, {0, 1}), -1);
    StripTable st(q);
    auto H = st.hammock_multiset(st.projective(0));
    EXPECT_EQ(H, Multiset<ZQVertex>{st.projective(0)});
    EXPECT_TRUE(check_mesh_identity(zq, {0, 0}, window(q, {0}, -3, 3)).ok);
    EXPECT_TRUE(check_hammock_mesh(st, st.projective(0)).ok);
}

TEST(Hammock, D4SinkSource) {
    Quiver q = load_quiver("1->2,3->2,4->2");
    StripTable st(q);
    const ZQVertex x = st.projective(q.index("2"));
    EXPECT_EQ(st.zq().h(x, ZQ::tau_inv(x)), 2);
    EXPECT_EQ(st.hom_dim(x, ZQ::tau_inv(x)), 2);

    Multiset<ZQVertex> expect{x, ZQ::tau_inv(x), ZQ::tau_inv(x), ZQ::tau_inv(ZQ::tau_inv(x))};
    auto succ = st.zq().successors(x);
    ASSERT_EQ(succ.size(), 3u);
    for (auto &y : succ) {
        expect.add(y);
        expect.add(ZQ::tau_inv(y));
    }
    auto H = st.hammock_multiset(x);
    EXPECT_EQ(H, expect);
    EXPECT_EQ(H.size(), 10);
}

TEST(Hammock, ThreeVertexSink) {
    Quiver q = load_quiver("1->2,3->2");
    StripTable st(q);
    const ZQVertex P1 = st.projective(0), P2 = st.projective(1), P3 = st.projective(2), I2 = st.injective(1);
    EXPECT_EQ(st.hom_dim(P2, P1), 1);
    EXPECT_EQ(st.hom_dim(P2, P2), 1);
    EXPECT_EQ(st.hammock_multiset(P2), (Multiset<ZQVertex>{P2, P1, P3, I2}));
    EXPECT_EQ(brute_force_hom(q, projective_dim(q, 0), projective_dim(q, 2)), 0);
    EXPECT_EQ(brute_force_hom(q, projective_dim(q, 1), injective_dim(q, 1)), 1);

    auto Y = fundamental_object(st, P2);
    auto tilted = serre_tilt(st, Y, {P2});
    EXPECT_EQ(tilted.X, (Multiset<ZQVertex>{I2, P1, P3, I2}));
    QuasiAddFn expect_fn = Y.h;
    expect_fn.subtract_delta(st.zq(), P2);
    EXPECT_EQ(tilted.h, expect_fn);
    auto same = serre_tilt(st, Y, {});
    EXPECT_EQ(same.X, Y.X);
    EXPECT_EQ(same.h, Y.h);
    EXPECT_THROW(serre_tilt(st, Y, {P2, P2}), std::invalid_argument);

    QuasiAddFn h = knit_hammock_fn(P2);
    h.add_hammock(P1);
    EXPECT_EQ(dominant_from_fn(st, h), st.hammock_multiset(P2) + st.hammock_multiset(P1));
    QuasiAddFn twice = knit_hammock_fn(P2);
    twice.add_hammock(P2);
    EXPECT_EQ(dominant_from_fn(st, twice), st.hammock_multiset(P2) + st.hammock_multiset(P2));
}

TEST(Hammock, DefectOfTiltIsDeltaTilde) {
    Quiver q = load_quiver("1->2,2->3,4->3");
    StripTable st(q);
    ZQ zq(q);
    for (int i = 0; i < q.size(); ++i) {
        const ZQVertex x = st.projective(i);
        QuasiAddFn d;
        d.subtract_delta(zq, x);
        // delta-tilde_x = delta_x + delta_{tau^-1 x} - sum_{x->y} delta_y
        std::map<ZQVertex, Int> expect{{x, -1}, {ZQ::tau_inv(x), -1}};
        for (auto &y : zq.successors(x)) expect[y] += 1;
        EXPECT_EQ(d.defect, expect);
    }
}

TEST(Hammock, MeshIdentitiesOnSweep) {
    for (auto &q : dynkin_sample()) {
        StripTable st(q);
        for (auto &x : around(st, -1, 2)) {
            auto eval = around(st, -3, 8);
            EXPECT_TRUE(check_mesh_identity(st.zq(), x, eval).ok) << quiver_string(q);
            auto r = check_hammock_mesh(st, x);
            EXPECT_TRUE(r.ok) << quiver_string(q) << " " << r.detail;
        }
    }
}

TEST(Hammock, MultiplicityMatchesDerivedHom) {
    for (auto &q : dynkin_sample()) {
        StripTable st(q);
        auto xs = around(st, 0, 2);
        auto ys = around(st, -2, 8);
        for (auto &x : xs) {
            auto H = st.hammock_multiset(x);
            for (auto &y : ys) EXPECT_EQ(H.count(y), derived_hom(st, x, y)) << quiver_string(q) << " " << zq_string(q, x) << " " << zq_string(q, y);
        }
    }
}

TEST(Hammock, SerreDuality) {
    for (auto &q : dynkin_sample()) {
        StripTable st(q);
        for (auto &x : around(st, 0, 1))
            for (auto &y : around(st, -1, 6)) EXPECT_EQ(st.hom_dim(x, y), st.hom_dim(y, st.serre(x)));
    }
}

TEST(Strip, ProjectiveInjectiveSlices) {
    for (auto &q : dynkin_sample()) {
        StripTable st(q);
        const int n = q.size();
        for (int i = 0; i < n; ++i) {
            auto lp = st.label(st.projective(i));
            EXPECT_EQ(lp.shift, 0);
            EXPECT_EQ(lp.dim, projective_dim(q, i));
            auto li = st.label(st.injective(i));
            EXPECT_EQ(li.shift, 0);
            EXPECT_EQ(li.dim, injective_dim(q, i));
            EXPECT_EQ(st.serre(st.projective(i)), st.injective(i));
            EXPECT_EQ(st.label(st.shift(st.projective(i))).shift, 1);
            auto [v, p] = st.ip_label(st.projective(i));
            EXPECT_EQ(p, st.height().xi[i]);
            EXPECT_EQ(st.from_ip(v, p), st.projective(i));
        }
        // knitting relation inside the module strip
        for (auto &[dim, z] : st.modules()) {
            auto zi = ZQ::tau_inv(z);
            if (st.label(zi).shift != 0) continue;
            DimVec s = zero_vec(q);
            for (auto &y : st.zq().successors(z)) s = s + st.label(y).dim;
            EXPECT_EQ(st.label(zi).dim, s - dim);
        }
        auto dyn = dynkin_type(q);
        ASSERT_TRUE(dyn);
        size_t roots = 0;
        for (auto &c : *dyn) roots += c.family == 'A' ? c.rank * (c.rank + 1) / 2 : c.rank * (c.rank - 1);
        EXPECT_EQ(st.modules().size(), roots) << quiver_string(q);
    }
}

TEST(Strip, NonDynkinRejected) {
    EXPECT_THROW(StripTable(load_quiver("1->5,2->5,3->5,4->5")), QuiverError);
}
