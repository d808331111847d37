#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hammock/checks.hpp"
#include "hammock/quiver.hpp"
#include "hammock/sweep.hpp"
#include "hammock/zq.hpp"

using namespace hammock;

namespace {

DimVec vec(std::initializer_list<Int> xs) { return DimVec(xs); }

template <class F>
QuiverError::Kind error_kind(F f) {
    try {
        f();
    } catch (const QuiverError &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected a QuiverError";
    return QuiverError::Kind::Parse;
}

std::vector<Quiver> sample_quivers() {
    std::vector<Quiver> qs;
    for (int n = 1; n <= 5; ++n)
        for (auto &q : type_a_quivers(n)) qs.push_back(q);
    for (auto &q : type_d_quivers(4)) qs.push_back(q);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 30; ++k) qs.push_back(random_acyclic_quiver(rng, 3 + k % 4, 0.5));
    return qs;
}

}  // namespace

TEST(Load, TextForms) {
    Quiver q = load_quiver("1->2");
    EXPECT_EQ(q.size(), 2);
    EXPECT_EQ(q.arrows().size(), 1u);

    Quiver a4 = load_quiver("1->2,2->3,4->3");
    EXPECT_EQ(a4.names(), (std::vector<std::string>{"1", "2", "3", "4"}));
    EXPECT_TRUE(a4.has_arrow(a4.index("4"), a4.index("3")));

    Quiver nl = load_quiver("# comment\nb->a\nc->a\n");
    EXPECT_EQ(nl.names(), (std::vector<std::string>{"b", "a", "c"}));

    Quiver iso = load_quiver("vertices: x, y\n");
    EXPECT_EQ(iso.size(), 2);
    EXPECT_TRUE(iso.arrows().empty());

    Quiver ordered = load_quiver("vertices: 1 2 3 4 5\n1->5, 2->5");
    EXPECT_EQ(ordered.index("5"), 4);
}

TEST(Load, JsonMatchesText) {
    Quiver a = load_quiver(R"({"vertices": ["1","2","3"], "arrows": [["1","2"],["3","2"]], "height": {"1": -1, "2": -2, "3": -1}})");
    Quiver b = load_quiver("1->2, 3->2\nheight: 1=-1, 2=-2, 3=-1");
    EXPECT_EQ(a.names(), b.names());
    ASSERT_EQ(a.arrows().size(), b.arrows().size());
    for (size_t k = 0; k < a.arrows().size(); ++k) {
        EXPECT_EQ(a.arrows()[k].source, b.arrows()[k].source);
        EXPECT_EQ(a.arrows()[k].target, b.arrows()[k].target);
    }
    ASSERT_TRUE(a.declared_height() && b.declared_height());
    EXPECT_EQ(a.declared_height()->xi, b.declared_height()->xi);
    EXPECT_EQ(effective_height(a).xi, (std::vector<Int>{-1, -2, -1}));
}

TEST(Load, Errors) {
    auto kind_of = [](const std::string &text) { return error_kind([&] { load_quiver(text); }); };
    EXPECT_EQ(kind_of("1->2,2->1"), QuiverError::Kind::Cycle);
    EXPECT_EQ(kind_of("1->2,2->3,3->1"), QuiverError::Kind::Cycle);
    EXPECT_EQ(kind_of("1->2,1->2"), QuiverError::Kind::MultipleEdge);
    EXPECT_EQ(kind_of("1->1"), QuiverError::Kind::Cycle);
    EXPECT_EQ(kind_of("1-2"), QuiverError::Kind::Parse);
    EXPECT_EQ(kind_of("1->2\nheight: 1=0, 2=0"), QuiverError::Kind::Height);
    EXPECT_EQ(kind_of("1->2\nheight: 1=0"), QuiverError::Kind::Height);
    EXPECT_EQ(kind_of(R"({"arrows": [["1"]]})"), QuiverError::Kind::Parse);
}

TEST(Paths, ProjectiveInjective) {
    Quiver a4 = load_quiver("1->2,2->3,4->3");
    EXPECT_EQ(projective_dim(a4, 0), vec({1, 1, 1, 0}));
    EXPECT_EQ(injective_dim(a4, 2), vec({1, 1, 1, 1}));
    Quiver sq = load_quiver("1->2,1->3,2->4,3->4");
    EXPECT_EQ(projective_dim(sq, 0), vec({1, 1, 1, 2}));
    EXPECT_EQ(injective_dim(sq, 3), vec({2, 1, 1, 1}));
}

TEST(EulerForm, SmallValues) {
    Quiver q = load_quiver("1->2");
    EXPECT_EQ(euler_form(q, alpha(q, 0), alpha(q, 0)), 1);
    EXPECT_EQ(euler_form(q, alpha(q, 0), alpha(q, 1)), -1);
    EXPECT_EQ(euler_form(q, alpha(q, 1), alpha(q, 0)), 0);
    Quiver sq = load_quiver("1->2,1->3,2->4,3->4");
    EXPECT_EQ(euler_form(sq, vec({1, 1, 0, 1}), vec({1, 0, 1, 1})), 0);
    EXPECT_EQ(error_kind([&] { euler_form(q, vec({1}), vec({1, 0})); }), QuiverError::Kind::Mismatch);
}

TEST(EulerForm, BilinearAndDual) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (auto &q : sample_quivers()) {
        const int n = q.size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                EXPECT_EQ(euler_form(q, projective_dim(q, i), alpha(q, j)), i == j ? 1 : 0);
                EXPECT_EQ(euler_form(q, alpha(q, j), injective_dim(q, i)), i == j ? 1 : 0);
                if (q.paths(i, j) > 0 && i != j) {
                    EXPECT_EQ(q.paths(j, i), 0);
                }
            }
        for (int k = 0; k < 5; ++k) {
            DimVec a(n), a2(n), b(n);
            for (int i = 0; i < n; ++i) {
                a[i] = coef(rng);
                a2[i] = coef(rng);
                b[i] = coef(rng);
            }
            EXPECT_EQ(euler_form(q, a + a2, b), euler_form(q, a, b) + euler_form(q, a2, b));
            EXPECT_EQ(euler_form(q, b, a + a2), euler_form(q, b, a) + euler_form(q, b, a2));
        }
    }
}

TEST(Reflect, Examples) {
    Quiver q = load_quiver("1->2");
    DimVec beta = vec({1, 1});
    EXPECT_EQ(reflect(q, beta, beta), vec({-1, -1}));
    EXPECT_EQ(reflect(q, beta, alpha(q, 1)), vec({-1, 0}));
    EXPECT_EQ(error_kind([&] { reflect(q, vec({1, 2}), beta); }), QuiverError::Kind::NotRoot);
}

TEST(Reflect, InvolutionPreservesSymmetricForm) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (auto &q : sample_quivers()) {
        const int n = q.size();
        for (int i = 0; i < n; ++i) {
            DimVec beta = projective_dim(q, i);
            for (int k = 0; k < 3; ++k) {
                DimVec u(n), v(n);
                for (int j = 0; j < n; ++j) {
                    u[j] = coef(rng);
                    v[j] = coef(rng);
                }
                EXPECT_EQ(reflect(q, beta, reflect(q, beta, u)), u);
                EXPECT_EQ(symmetric_form(q, reflect(q, beta, u), reflect(q, beta, v)), symmetric_form(q, u, v));
            }
        }
    }
}

TEST(Subquiver, Support) {
    Quiver q = load_quiver("1->2,3->2");
    Subquiver s = support_subquiver(q, vec({1, 1, 0}));
    EXPECT_EQ(s.quiver.size(), 2);
    EXPECT_EQ(s.quiver.arrows().size(), 1u);
    EXPECT_EQ(s.sinks, (std::vector<int>{1}));
    EXPECT_EQ(s.sources, (std::vector<int>{0}));
    EXPECT_EQ(support_subquiver(q, vec({0, 0, 0})).quiver.size(), 0);
    EXPECT_EQ(error_kind([&] { support_subquiver(q, vec({1, -1, 0})); }), QuiverError::Kind::NotRoot);
}

TEST(Height, Examples) {
    Quiver q = load_quiver("1->2,3->2");
    auto xi = height_function(q);
    ASSERT_TRUE(xi);
    EXPECT_EQ(xi->xi, (std::vector<Int>{0, -1, 0}));
    // triangle with two arrows one way and one the other has no height
    EXPECT_FALSE(height_function(load_quiver("1->2,2->3,1->3")));
    // square with balanced orientation does
    EXPECT_TRUE(height_function(load_quiver("1->2,2->4,1->3,3->4")));
    EXPECT_THROW(effective_height(load_quiver("1->2,2->3,1->3")), QuiverError);
}

TEST(Height, TreesAlwaysHaveOne) {
    for (auto &q : tree_quivers(6)) {
        auto xi = height_function(q);
        ASSERT_TRUE(xi) << quiver_string(q);
        for (auto &a : q.arrows()) EXPECT_EQ(xi->xi[a.target], xi->xi[a.source] - 1);
    }
}

TEST(Extended, StarArrowsAndPaths) {
    Quiver q = load_quiver("1->2");
    ExtendedQuiver qb(q);
    ASSERT_EQ(qb.size(), 2);
    EXPECT_EQ(qb.arrow_name(1), "2->*");
    EXPECT_TRUE(qb.in_paths(0).empty());

    Quiver sq = load_quiver("1->2,1->3,2->4,3->4");
    ExtendedQuiver sb(sq);
    std::set<std::string> paths;
    for (auto &p : sb.in_paths(3)) {
        std::string s;
        for (int a : p) s += (s.empty() ? "" : ",") + sb.arrow_name(a);
        paths.insert(s);
    }
    EXPECT_EQ(paths, (std::set<std::string>{"2->4", "3->4", "1->2,2->4", "1->3,3->4"}));
    EXPECT_EQ(sb.parse_arrow("4->*"), sb.star_of(3));
    EXPECT_EQ(error_kind([&] { sb.parse_arrow("4->1"); }), QuiverError::Kind::UnknownVertex);
}

TEST(Sweep, Enumerations) {
    EXPECT_EQ(type_a_quivers(5).size(), 16u);
    EXPECT_EQ(type_d_quivers(5).size(), 16u);
    // unlabeled trees on 1..7 vertices
    std::vector<size_t> counts{1, 1, 1, 2, 3, 6, 11};
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(unlabeled_trees(n).size(), counts[n - 1]) << n;
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) {
        Quiver q = random_acyclic_quiver(rng, 6, 0.5);
        EXPECT_EQ(static_cast<int>(q.topological_order().size()), q.size());
    }
}

TEST(Sweep, GuardRails) {
    auto items = parse_sweep("A1-6,D4-5,T6,R100");
    ASSERT_EQ(items.size(), 4u);
    EXPECT_EQ(items[0].family, 'A');
    EXPECT_EQ(items[0].hi, 6);
    EXPECT_EQ(items[3].hi, 100);
    EXPECT_THROW(parse_sweep("A9"), std::invalid_argument);
    EXPECT_THROW(parse_sweep("D3"), std::invalid_argument);
    EXPECT_THROW(parse_sweep("D7"), std::invalid_argument);
    EXPECT_THROW(parse_sweep("T8"), std::invalid_argument);
    EXPECT_THROW(parse_sweep("R1001"), std::invalid_argument);
    EXPECT_THROW(parse_sweep("A3-2"), std::invalid_argument);
    EXPECT_THROW(parse_sweep("E6"), std::invalid_argument);
    EXPECT_THROW(parse_sweep(""), std::invalid_argument);
}

TEST(Dynkin, Types) {
    EXPECT_EQ(dynkin_string(load_quiver("1->2,2->3,4->3")), "A4");
    EXPECT_EQ(dynkin_string(load_quiver("1->2,3->2,4->2")), "D4");
    EXPECT_FALSE(is_dynkin(load_quiver("1->5,2->5,3->5,4->5")));
    EXPECT_TRUE(is_dynkin(load_quiver("1->2,2->3,4->3,5->4,3->6")));  // E6
    EXPECT_FALSE(is_dynkin(load_quiver("1->2,3->2,4->3,5->3,3->6")));
    EXPECT_FALSE(is_dynkin(load_quiver("1->2,1->3,2->4,3->4")));
}
