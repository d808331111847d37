#include "hammock/cluster.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "hammock/zq.hpp"

namespace hammock {

Seed initial_seed(const Quiver &q) {
    const int n = q.size();
    Seed s{n, std::vector<std::vector<Int>>(2 * n, std::vector<Int>(n, 0)), {}};
    for (auto &a : q.arrows()) {
        s.b[a.target][a.source] += 1;
        s.b[a.source][a.target] -= 1;
    }
    for (int i = 0; i < n; ++i) {
        s.b[n + i][i] = 1;
        s.x.push_back(LaurentPoly::var(Var::U(i)));
    }
    return s;
}

Seed mutate(const Seed &s, int k) {
    const int n = s.n;
    if (k < 0 || k >= n) throw std::out_of_range("mutation direction must be mutable");
    LaurentPoly pos(1), neg(1);
    for (int i = 0; i < 2 * n; ++i) {
        Int e = s.b[i][k];
        if (e == 0) continue;
        LaurentPoly xi = i < n ? s.x[i] : LaurentPoly::var(Var::C(i - n));
        if (e > 0)
            pos *= xi.pow(e);
        else
            neg *= xi.pow(-e);
    }
    Seed r = s;
    r.x[k] = (pos + neg).divide_exact(s.x[k]);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                r.b[i][j] = -s.b[i][j];
            else
                r.b[i][j] = s.b[i][j] + (std::abs(s.b[i][k]) * s.b[k][j] + s.b[i][k] * std::abs(s.b[k][j])) / 2;
        }
    return r;
}

std::string seed_key(const Seed &s) {
    std::vector<std::string> v;
    for (auto &x : s.x) v.push_back(x.str());
    std::sort(v.begin(), v.end());
    std::string key;
    for (auto &t : v) key += t + "|";
    return key;
}

DimVec denominator_vector(const Quiver &q, const LaurentPoly &x) {
    DimVec d = zero_vec(q);
    for (int i = 0; i < q.size(); ++i) {
        Int lo = 0;
        bool first = true;
        for (auto &[m, c] : x.terms()) {
            Int e = m.exponent(Var::U(i));
            if (first || e < lo) lo = e;
            first = false;
        }
        d[i] = -lo;
    }
    return d;
}

LaurentPoly f_polynomial(const LaurentPoly &x) {
    return x.substitute([](const Var &v) -> std::optional<LaurentPoly> {
        if (v.kind == Var::Kind::U) return LaurentPoly(1);
        if (v.kind == Var::Kind::C) return LaurentPoly::var(Var::YH(v.i));
        return std::nullopt;
    });
}

std::vector<Int> g_vector(const Quiver &q, const LaurentPoly &x) {
    std::vector<Int> g(q.size(), 0);
    for (auto &[m, c] : x.terms()) {
        bool free = true;
        for (auto &[v, e] : m.factors())
            if (v.kind == Var::Kind::C) free = false;
        if (!free) continue;
        for (int i = 0; i < q.size(); ++i) g[i] = m.exponent(Var::U(i));
        break;
    }
    return g;
}

namespace {

bool laurent_with_polynomial_coefficients(const LaurentPoly &x) {
    for (auto &[m, c] : x.terms())
        for (auto &[v, e] : m.factors())
            if (v.kind == Var::Kind::C && e < 0) return false;
    return true;
}

}  // namespace

FiniteTypeTable enumerate_finite_type(const Quiver &q, size_t max_seeds) {
    if (!is_dynkin(q)) throw QuiverError(QuiverError::Kind::NotDynkin, "cluster enumeration needs a Dynkin quiver");
    FiniteTypeTable t;
    std::set<LaurentPoly> vars;
    std::unordered_set<std::string> seen;
    std::deque<Seed> queue;
    Seed s0 = initial_seed(q);
    seen.insert(seed_key(s0));
    queue.push_back(s0);
    while (!queue.empty()) {
        Seed s = std::move(queue.front());
        queue.pop_front();
        ++t.seeds;
        for (auto &x : s.x) {
            if (!vars.insert(x).second) continue;
            t.variables.push_back(x);
            if (!laurent_with_polynomial_coefficients(x)) t.laurent_ok = false;
            DimVec d = denominator_vector(q, x);
            if (!nonneg(d)) continue;
            ClusterVariable cv{x, d, f_polynomial(x), g_vector(q, x)};
            if (!t.by_denominator.emplace(d, cv).second)
                throw std::logic_error("two cluster variables share denominator " + dim_string(d));
        }
        for (int k = 0; k < q.size(); ++k) {
            Seed r = mutate(s, k);
            if (seen.insert(seed_key(r)).second) {
                if (seen.size() > max_seeds) throw std::runtime_error("seed enumeration exceeded its bound");
                queue.push_back(std::move(r));
            }
        }
    }
    return t;
}

DimVec injective_in_support(const Quiver &q, const DimVec &beta, int i) {
    std::vector<int> verts;
    for (int v = 0; v < q.size(); ++v)
        if (beta[v] != 0) verts.push_back(v);
    Subquiver sub = full_subquiver(q, verts);
    auto it = std::find(verts.begin(), verts.end(), i);
    if (it == verts.end()) throw std::invalid_argument("vertex outside the support");
    DimVec local = injective_dim(sub.quiver, static_cast<int>(it - verts.begin()));
    DimVec r = zero_vec(q);
    for (size_t k = 0; k < verts.size(); ++k) r[verts[k]] = local[k];
    return r;
}

std::vector<DimVec> support_components(const Quiver &q, const DimVec &beta) {
    std::vector<DimVec> out;
    std::vector<bool> seen(q.size(), false);
    for (int s = 0; s < q.size(); ++s) {
        if (beta[s] == 0 || seen[s]) continue;
        DimVec comp = zero_vec(q);
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp[v] = beta[v];
            for (int w : q.neighbours(v))
                if (beta[w] != 0 && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        out.push_back(comp);
    }
    return out;
}

namespace {

void require_thin(const DimVec &beta) {
    for (Int b : beta)
        if (b != 0 && b != 1) throw std::invalid_argument("F-polynomial recursion needs a 0/1 vector, got " + dim_string(beta));
}

LaurentPoly fpoly_rec(const Quiver &q, const DimVec &beta, const SinkChooser &choose,
                      std::map<DimVec, LaurentPoly> &memo) {
    if (is_zero(beta)) return LaurentPoly(1);
    if (auto it = memo.find(beta); it != memo.end()) return it->second;
    auto comps = support_components(q, beta);
    LaurentPoly r(1);
    if (comps.size() > 1) {
        for (auto &c : comps) r *= fpoly_rec(q, c, choose, memo);
    } else {
        auto sinks = support_sinks(q, beta);
        int i = choose(sinks);
        r = fpoly_rec(q, beta - injective_in_support(q, beta, i), choose, memo) +
            LaurentPoly::var(Var::YH(i)) * fpoly_rec(q, beta - alpha(q, i), choose, memo);
    }
    memo.emplace(beta, r);
    return r;
}

std::set<LaurentPoly> fpoly_all_rec(const Quiver &q, const DimVec &beta, std::map<DimVec, std::set<LaurentPoly>> &memo) {
    if (is_zero(beta)) return {LaurentPoly(1)};
    if (auto it = memo.find(beta); it != memo.end()) return it->second;
    auto comps = support_components(q, beta);
    std::set<LaurentPoly> out;
    if (comps.size() > 1) {
        out = {LaurentPoly(1)};
        for (auto &c : comps) {
            std::set<LaurentPoly> next;
            for (auto &a : out)
                for (auto &b : fpoly_all_rec(q, c, memo)) next.insert(a * b);
            out = std::move(next);
        }
    } else {
        for (int i : support_sinks(q, beta))
            for (auto &a : fpoly_all_rec(q, beta - injective_in_support(q, beta, i), memo))
                for (auto &b : fpoly_all_rec(q, beta - alpha(q, i), memo))
                    out.insert(a + LaurentPoly::var(Var::YH(i)) * b);
    }
    memo.emplace(beta, out);
    return out;
}

}  // namespace

LaurentPoly fpoly_recursion(const Quiver &q, const DimVec &beta, const SinkChooser &choose) {
    if (static_cast<int>(beta.size()) != q.size()) throw std::invalid_argument("beta has the wrong size");
    require_thin(beta);
    std::map<DimVec, LaurentPoly> memo;
    return fpoly_rec(q, beta, choose, memo);
}

std::set<LaurentPoly> fpoly_recursion_all(const Quiver &q, const DimVec &beta) {
    if (static_cast<int>(beta.size()) != q.size()) throw std::invalid_argument("beta has the wrong size");
    require_thin(beta);
    std::map<DimVec, std::set<LaurentPoly>> memo;
    return fpoly_all_rec(q, beta, memo);
}

std::vector<DimVec> type_a_positive_roots(const Quiver &q) {
    auto types = dynkin_type(q);
    if (!types) throw QuiverError(QuiverError::Kind::NotDynkin, "not a Dynkin quiver");
    for (auto &c : *types)
        if (c.family != 'A') throw QuiverError(QuiverError::Kind::NotDynkin, "not of type A");
    std::vector<DimVec> out;
    const int n = q.size();
    for (long long mask = 1; mask < (1LL << n); ++mask) {
        DimVec v = zero_vec(q);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
        if (support_components(q, v).size() == 1) out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](const DimVec &a, const DimVec &b) {
        return total(a) != total(b) ? total(a) < total(b) : a > b;
    });
    return out;
}

SimpleCharResult compare_simple_character(const Quiver &q, const HeightFunction &xi, const DimVec &beta, const LaurentPoly &oracle,
                          Int fspec) {
    SimpleCharResult r;
    r.oracle = oracle;
    r.euler = a_to_yhat(specialize_F(simple_complex_char(q, xi, canonical_cd_for(q, beta)), fspec));
    r.ok = r.euler == r.oracle;
    if (!r.ok) r.diff = (r.euler - r.oracle).str(&q);
    return r;
}

CheckResult check_exchange(const Quiver &q, const FiniteTypeTable &t, const DimVec &beta, int sink) {
    auto at_y1 = [](const LaurentPoly &p) {
        return p.substitute([](const Var &v) -> std::optional<LaurentPoly> {
            if (v.kind == Var::Kind::C) return LaurentPoly(1);
            return std::nullopt;
        });
    };
    auto u = [&](const DimVec &g) {
        LaurentPoly r(1);
        for (auto &c : support_components(q, g)) {
            auto it = t.by_denominator.find(c);
            if (it == t.by_denominator.end()) throw std::logic_error("no cluster variable with denominator " + dim_string(c));
            r *= at_y1(it->second.expr);
        }
        return r;
    };
    LaurentPoly lhs = u(beta) * LaurentPoly::var(Var::U(sink));
    LaurentPoly prod(1);
    for (int j : q.out(sink)) prod *= LaurentPoly::var(Var::U(j));
    LaurentPoly rest = lhs - prod * u(beta - alpha(q, sink));
    DimVec bprime = beta - injective_in_support(q, beta, sink);
    std::string where = "beta " + dim_string(beta) + " sink " + q.name(sink) + ": ";
    try {
        auto term = rest.divide_exact(u(bprime)).as_term();
        if (term && term->second == 1) {
            bool initial = true;
            for (auto &[v, e] : term->first.factors())
                if (v.kind != Var::Kind::U || e < 0) initial = false;
            if (initial) return {};
        }
        return {false, where + rest.str(&q) + " is not an initial monomial times u" + dim_string(bprime)};
    } catch (const LaurentError &) {
        return {false, where + "u" + dim_string(bprime) + " does not divide " + rest.str(&q)};
    }
}

}  // namespace hammock
