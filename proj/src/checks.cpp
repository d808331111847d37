#include "hammock/checks.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <stdexcept>

#include "hammock/cluster.hpp"
#include "hammock/complexes.hpp"
#include "hammock/exceptional.hpp"
#include "hammock/sweep.hpp"
#include "hammock/yring.hpp"
#include "hammock/zq.hpp"

namespace hammock {

std::vector<SweepItem> parse_sweep(const std::string &spec) {
    std::vector<SweepItem> items;
    static const std::regex item(R"(\s*([ADTR])(\d+)(?:-(\d+))?\s*)");
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::smatch m;
        if (!std::regex_match(tok, m, item)) throw std::invalid_argument("bad sweep item '" + tok + "'");
        SweepItem it{m[1].str()[0], std::stoi(m[2].str()), 0};
        it.hi = m[3].matched ? std::stoi(m[3].str()) : it.lo;
        if (it.lo > it.hi) throw std::invalid_argument("empty range in sweep item '" + tok + "'");
        switch (it.family) {
        case 'A':
            if (it.lo < 1 || it.hi > 8) throw std::invalid_argument("A_n sweeps allow 1 <= n <= 8");
            break;
        case 'D':
            if (it.lo < 4 || it.hi > 6) throw std::invalid_argument("D_n sweeps allow 4 <= n <= 6");
            break;
        case 'T':
            if (m[3].matched || it.hi < 1 || it.hi > 7) throw std::invalid_argument("tree sweeps take one bound, at most 7");
            it.lo = 1;
            break;
        case 'R':
            if (m[3].matched || it.hi < 1 || it.hi > 1000) throw std::invalid_argument("random sweeps take a count up to 1000");
            it.lo = 1;
            break;
        }
        items.push_back(it);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return items;
}

std::string default_sweep() { return "A1-6,D4-5,T6,R100"; }

std::vector<std::vector<int>> small_multisets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &self, int from) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == k) return;
        for (int a = from; a < m; ++a) {
            cur.push_back(a);
            self(self, a);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

struct Collector {
    const Quiver &q;
    std::string name;
    std::vector<CheckLine> lines;

    // first failure per suite is kept as the counterexample
    void add(const std::string &suite, bool ok, const std::string &detail = "") {
        for (auto &l : lines)
            if (l.suite == suite) {
                if (l.ok && !ok) {
                    l.ok = false;
                    l.detail = detail;
                }
                return;
            }
        lines.push_back({suite, name, ok, ok ? "" : detail});
    }
};

std::vector<ZQVertex> tau_window(const Quiver &q) { return window(q, zero_vec(q), 0, 2); }

void check_mesh(Collector &c) {
    ZQ zq(c.q);
    const Int n = c.q.size();
    auto eval = window(c.q, zero_vec(c.q), -n - 2, n + 4);
    for (auto &x : tau_window(c.q)) {
        auto r = check_mesh_identity(zq, x, eval);
        c.add("mesh", r.ok, r.detail);
    }
}

void check_hammock_mesh_suite(Collector &c) {
    if (!is_dynkin(c.q)) return;
    StripTable st(c.q);
    for (auto &x : tau_window(c.q)) {
        auto r = check_hammock_mesh(st, x);
        c.add("hammock mesh", r.ok, r.detail);
    }
}

void check_family(Collector &c, const ExcFamily &f) {
    auto rep = verify_family(f);
    for (auto &r : rep.results) c.add("family: " + r.name, r.ok, r.detail);
}

void check_round_trip(Collector &c, const ExcFamily &f) {
    std::vector<Multiset<DimVec>> zs{{}};
    for (int v = 0; v < f.n(); ++v) {
        DimVec inj = injective_dim(f.q, v);
        bool proj = false;
        for (int w = 0; w < f.n(); ++w)
            if (inj == projective_dim(f.q, w)) proj = true;
        if (!proj) {
            zs.push_back({inj});
            break;
        }
    }
    for (auto &arrows : small_multisets(f.qbar.size(), 2))
        for (auto &Z : zs) {
            Multiset<int> am;
            for (int a : arrows) am.add(a);
            Multiset<DimVec> ms = compose_dominant(f, Z, am);
            std::string what = "Z=" + std::to_string(Z.size()) + " arrows=" + spec_string(f.qbar, {am});
            try {
                Decomposition d = decompose_dominant(f, ms);
                c.add("round trip", d.Z == Z && d.arrows == am, what + " decomposed differently");
            } catch (const DecompositionError &e) {
                c.add("round trip", false, what + ": " + e.what());
            }
        }
}

void check_tsystem_suite(Collector &c) {
    auto xi = height_function(c.q);
    if (!xi) return;
    auto r = check_tsystem(c.q, *xi);
    c.add("t-system", r.ok, r.detail);
}

void check_standard(Collector &c, const ExcFamily &f, const CheckOptions &opt) {
    const HeightFunction xi = effective_height(c.q);
    const int k = c.q.size() <= 4 ? 3 : 2;
    const Int fspec = opt.inject_fault ? 1 : -1;
    for (auto &arrows : small_multisets(f.qbar.size(), k)) {
        StandardSpec spec;
        for (int a : arrows) spec.arrows.add(a);
        std::string what = spec_string(f.qbar, spec);
        LaurentPoly chi = euler_char_standard(f.qbar, xi, spec);
        LaurentPoly want = standard_trunc_renormalized(c.q, xi, spec_vertices(f.qbar, spec));
        LaurentPoly got = specialize_F(chi, fspec);
        c.add("standard character", got == want, what + ": " + got.str(&c.q) + " != " + want.str(&c.q));
        ComplexSkeleton sk = standard_complex(f, spec);
        c.add("standard skeleton", euler_char(xi, sk) == leading_monomial(xi, sk) * chi,
              what + ": skeleton Euler characteristic differs from the recursion");
        c.add("standard skeleton", sk.max_degree() == total(spec_dvec(f.qbar, spec)), what + ": length != d(M)");
        bool fit = true;
        for (auto &[deg, objs] : sk.degrees)
            for (auto &o : objs) fit = fit && o.tilts_fit;
        c.add("standard skeleton", fit, what + ": a tilt has no projective to act on");
    }
}

bool is_connected_type_a(const Quiver &q) {
    auto t = dynkin_type(q);
    return t && t->size() == 1 && t->front().family == 'A';
}

void check_cluster(Collector &c) {
    if (!is_connected_type_a(c.q)) return;
    const HeightFunction xi = effective_height(c.q);
    const int n = c.q.size();
    FiniteTypeTable table = enumerate_finite_type(c.q);
    auto roots = type_a_positive_roots(c.q);
    c.add("cluster count", static_cast<int>(table.by_denominator.size()) == n * (n + 1) / 2 &&
                               static_cast<int>(table.variables.size()) == n * (n + 3) / 2,
          std::to_string(table.by_denominator.size()) + " F-polynomials");
    c.add("laurent", table.laurent_ok, "a cluster variable is not Laurent");
    for (auto &beta : roots) {
        auto it = table.by_denominator.find(beta);
        if (it == table.by_denominator.end()) {
            c.add("cluster count", false, "no cluster variable with denominator " + dim_string(beta));
            continue;
        }
        const LaurentPoly &F = it->second.F;
        auto r = compare_simple_character(c.q, xi, beta, F);
        c.add("simple character", r.ok, dim_string(beta) + ": " + r.diff);
        c.add("f recursion", fpoly_recursion(c.q, beta) == F, dim_string(beta));
        Monomial top;
        for (int i = 0; i < n; ++i)
            if (beta[i]) top = top * Monomial::of(Var::YH(i), beta[i]);
        bool shape = F.coeff(Monomial()) == 1 && F.coeff(top) == 1;
        for (auto &[m, k] : F.terms())
            for (auto &[v, e] : m.factors())
                if (e < 0 || e > beta[v.i]) shape = false;
        c.add("f shape", shape, dim_string(beta) + ": " + F.str(&c.q));
        for (int s : support_sinks(c.q, beta)) {
            auto e = check_exchange(c.q, table, beta, s);
            c.add("exchange", e.ok, e.detail);
        }
    }
}

}  // namespace

std::vector<CheckLine> check_quiver(const Quiver &q, unsigned suites, const CheckOptions &opt) {
    Collector c{q, quiver_string(q), {}};
    auto on = [&](Suite s) { return (suites & static_cast<unsigned>(s)) != 0; };
    auto guarded = [&](const std::string &suite, auto &&fn) {
        try {
            fn();
        } catch (const std::exception &e) {
            c.add(suite, false, std::string("exception: ") + e.what());
        }
    };
    if (on(Suite::Mesh)) guarded("mesh", [&] { check_mesh(c); });
    if (on(Suite::HammockMesh)) guarded("hammock mesh", [&] { check_hammock_mesh_suite(c); });
    if (on(Suite::TSystem)) guarded("t-system", [&] { check_tsystem_suite(c); });
    if (on(Suite::Family) || on(Suite::RoundTrip) || on(Suite::Standard)) {
        guarded("family", [&] {
            ExcFamily f = build_family(q);
            if (on(Suite::Family)) check_family(c, f);
            if (on(Suite::RoundTrip)) guarded("round trip", [&] { check_round_trip(c, f); });
            if (on(Suite::Standard) && height_function(q)) guarded("standard character", [&] { check_standard(c, f, opt); });
        });
    }
    if (on(Suite::Cluster)) guarded("simple character", [&] { check_cluster(c); });
    return c.lines;
}

std::vector<CheckLine> run_sweep(const std::vector<SweepItem> &items, const CheckOptions &opt) {
    std::vector<CheckLine> out;
    auto append = [&](const std::vector<CheckLine> &ls) { out.insert(out.end(), ls.begin(), ls.end()); };
    std::mt19937_64 rng(opt.seed);
    for (auto &it : items) {
        switch (it.family) {
        case 'A':
            for (int n = it.lo; n <= it.hi; ++n)
                for (auto &q : type_a_quivers(n)) append(check_quiver(q, static_cast<unsigned>(Suite::All), opt));
            break;
        case 'D':
            for (int n = it.lo; n <= it.hi; ++n)
                for (auto &q : type_d_quivers(n))
                    append(check_quiver(q, static_cast<unsigned>(Suite::All) & ~static_cast<unsigned>(Suite::Cluster), opt));
            break;
        case 'T':
            for (auto &q : tree_quivers(it.hi)) append(check_quiver(q, static_cast<unsigned>(Suite::TSystem), opt));
            break;
        case 'R': {
            std::uniform_int_distribution<int> size(3, 7);
            for (int k = 0; k < it.hi; ++k) {
                Quiver q = random_acyclic_quiver(rng, size(rng), 0.4);
                append(check_quiver(q, static_cast<unsigned>(Suite::Mesh), opt));
            }
            break;
        }
        }
    }
    return out;
}

}  // namespace hammock
