#include "hammock/exceptional.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "hammock/hom_oracle.hpp"

namespace hammock {

namespace {

struct Partial {
    std::vector<ExcSequence> cols;
    std::map<int, int> t;  // Q arrow index -> t
    std::vector<ExcStage> stages;
};

int arrow_index(const Quiver &q, int s, int d) {
    for (int a = 0; a < static_cast<int>(q.arrows().size()); ++a)
        if (q.arrows()[a].source == s && q.arrows()[a].target == d) return a;
    return -1;
}

Partial build_rec(const Quiver &q, const std::vector<int> &L) {
    Partial out;
    const int n = static_cast<int>(L.size());
    if (n == 0) {
        out.cols.push_back({});
        return out;
    }
    std::vector<bool> alive(q.size(), false);
    for (int v : L) alive[v] = true;
    const int i = L[n - 1];
    for (int a : q.in(i))
        if (alive[a]) throw std::logic_error("stage vertex is not a source of the remaining subquiver");

    std::vector<DimVec> P;
    for (int v : L) P.push_back(projective_dim(q, v));

    ExcStage st;
    st.source = i;
    st.alive = L;
    for (int l = n - 2; l >= 0; --l)
        if (q.has_arrow(i, L[l])) st.positions.push_back(l);
    const int r = static_cast<int>(st.positions.size());
    st.betas.push_back(P[n - 1]);
    for (int s = 0; s < r; ++s) st.betas.push_back(st.betas.back() - P[st.positions[s]]);

    for (int t = 0; t <= r; ++t) {
        const int kt = t == 0 ? n - 1 : st.positions[t - 1];
        ExcSequence col;
        for (int l = 0; l < n - 1; ++l) col.push_back(l < kt ? P[l] : reflect(q, st.betas[t], P[l]));
        col.push_back(st.betas[t]);
        out.cols.push_back(col);
    }
    for (int s = 0; s < r; ++s) out.t[arrow_index(q, i, L[st.positions[s]])] = s;
    if (st.betas.back() != alpha(q, i)) throw std::logic_error("last stage vector is not the simple at the source");

    std::vector<int> rest(L.begin(), L.end() - 1);
    Partial sub = build_rec(q, rest);
    const DimVec ai = alpha(q, i);
    for (size_t c = 0; c < sub.cols.size(); ++c) {
        ExcSequence col;
        for (auto &v : sub.cols[c]) col.push_back(reflect(q, ai, v));
        col.push_back(ai);
        if (c == 0) {
            if (col != out.cols.back())
                throw std::logic_error("reflected projectives of the subquiver disagree with the last stage");
            continue;
        }
        out.cols.push_back(col);
    }
    for (auto &[a, t] : sub.t) out.t[a] = t + r;
    out.stages.push_back(st);
    for (auto s : sub.stages) {
        s.t_offset += r;
        out.stages.push_back(s);
    }
    return out;
}

std::vector<DimVec> distinct_row(const ExcFamily &f, int i, int lo, int hi) {
    std::vector<DimVec> r;
    for (int s = lo; s <= hi; ++s) {
        const DimVec &v = f.x(i, s);
        if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
    }
    return r;
}

void add_all(Multiset<DimVec> &ms, const std::vector<DimVec> &xs) {
    for (auto &x : xs) ms.add(x);
}

}  // namespace

ExcSequence initial_projective_sequence(const Quiver &q) {
    ExcSequence s;
    auto &topo = q.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) s.push_back(projective_dim(q, *it));
    return s;
}

ExcFamily build_family(const Quiver &q) {
    auto &topo = q.topological_order();
    return build_family(q, std::vector<int>(topo.rbegin(), topo.rend()));
}

ExcFamily build_family(const Quiver &q, const std::vector<int> &L) {
    std::vector<int> pos(q.size(), -1);
    if (static_cast<int>(L.size()) != q.size()) throw std::invalid_argument("order must list every vertex once");
    for (int l = 0; l < q.size(); ++l) {
        if (L[l] < 0 || L[l] >= q.size() || pos[L[l]] >= 0) throw std::invalid_argument("order must list every vertex once");
        pos[L[l]] = l;
    }
    for (auto &a : q.arrows())
        if (pos[a.source] < pos[a.target]) throw std::invalid_argument("order must put arrow targets before sources");
    Partial p = build_rec(q, L);
    ExcFamily f{q, ExtendedQuiver(q), L, std::vector<int>(q.size()), p.cols, {}, p.stages};
    for (int l = 0; l < q.size(); ++l) f.vertex_position[L[l]] = l;
    const int m = static_cast<int>(q.arrows().size());
    if (f.m() != m) throw std::logic_error("family has the wrong number of columns");
    f.t.assign(f.qbar.size(), m);
    for (auto &[a, t] : p.t) f.t[a] = t;
    return f;
}

ExcSequence braid_sigma(const Quiver &q, const ExcSequence &seq, int k, Braid dir) {
    if (k < 1 || k >= static_cast<int>(seq.size())) throw std::out_of_range("braid position out of range");
    const DimVec &A = seq[k - 1];
    const DimVec &B = seq[k];
    Int e = euler_form(q, A, B);
    DimVec C = dir == Braid::Right ? A - e * B : B - e * A;
    if (!nonneg(C)) {
        C = Int{-1} * C;
        if (!nonneg(C)) throw std::invalid_argument("braid move produced a vector of mixed sign " + dim_string(C));
    }
    ExcSequence r = seq;
    if (dir == Braid::Right) {
        r[k - 1] = B;
        r[k] = C;
    } else {
        r[k - 1] = C;
        r[k] = A;
    }
    return r;
}

ExcSequence stage_step_by_braids(const Quiver &q, const ExcSequence &seq, int k_next) {
    const int n = static_cast<int>(seq.size());
    const int K = k_next + 1;
    ExcSequence s = seq;
    for (int p = n - 1; p >= K; --p) s = braid_sigma(q, s, p, Braid::Right);
    for (int p = K + 1; p <= n - 1; ++p) s = braid_sigma(q, s, p, Braid::Left);
    return s;
}

std::string entry_label(const Quiver &q, const DimVec &v) {
    for (int i = 0; i < q.size(); ++i)
        if (v == projective_dim(q, i)) return "P" + q.name(i);
    for (int i = 0; i < q.size(); ++i)
        if (v == injective_dim(q, i)) return "I" + q.name(i);
    return dim_string(v);
}

std::vector<DimVec> pi_upto(const ExcFamily &f, int i, int t) { return distinct_row(f, i, 0, t); }
std::vector<DimVec> pi_below(const ExcFamily &f, int i, int t) { return distinct_row(f, i, 0, t - 1); }
std::vector<DimVec> pi_all(const ExcFamily &f, int i) { return distinct_row(f, i, 0, f.m()); }

namespace {

using DimList = std::vector<DimVec>;

void append(DimList &out, const DimList &xs) { out.insert(out.end(), xs.begin(), xs.end()); }

DimList in_path_list(const ExcFamily &f, int v) {
    DimList out;
    for (auto &p : f.qbar.in_paths(v)) {
        const BarArrow &first = f.qbar.arrows()[p.front()];
        append(out, pi_below(f, first.source, f.t[p.front()]));
    }
    return out;
}

Multiset<DimVec> in_path_part(const ExcFamily &f, int v) {
    Multiset<DimVec> ms;
    add_all(ms, in_path_list(f, v));
    return ms;
}

DimList pibar_source(const ExcFamily &f, int a) {
    const BarArrow &ar = f.qbar.arrows().at(a);
    DimList out = pi_upto(f, ar.source, f.t[a]);
    append(out, in_path_list(f, ar.source));
    return out;
}

DimList pibar_target(const ExcFamily &f, int a) {
    const BarArrow &ar = f.qbar.arrows().at(a);
    if (ar.is_star()) {
        int best = -1;
        for (int b : f.qbar.in(ar.source))
            if (best < 0 || f.t[b] > f.t[best]) best = b;
        return best < 0 ? pibar_source(f, a) : pibar_target(f, best);
    }
    DimList out = pi_upto(f, ar.target, f.t[a]);
    append(out, in_path_list(f, ar.target));
    return out;
}

}  // namespace

std::vector<DimVec> pibar_list(const ExcFamily &f, int a, PiVariant variant) {
    if (a < 0 || a >= f.qbar.size()) throw std::out_of_range("unknown arrow");
    return variant == PiVariant::Source ? pibar_source(f, a) : pibar_target(f, a);
}

Multiset<DimVec> pibar(const ExcFamily &f, int a, PiVariant variant) {
    Multiset<DimVec> ms;
    add_all(ms, pibar_list(f, a, variant));
    return ms;
}

Multiset<DimVec> pibar_envelope(const ExcFamily &f, int a) {
    const BarArrow &ar = f.qbar.arrows().at(a);
    Multiset<DimVec> ms;
    add_all(ms, pi_all(f, ar.source));
    return ms + in_path_part(f, ar.source);
}

Multiset<DimVec> z_projectives(const Quiver &q, const DimVec &gamma) {
    Multiset<DimVec> ms;
    for (int j = 0; j < q.size(); ++j) ms.add(projective_dim(q, j), gamma.at(j));
    return ms;
}

Multiset<DimVec> projective_part(const Quiver &q, const Multiset<DimVec> &ms) {
    Multiset<DimVec> r;
    for (int j = 0; j < q.size(); ++j) {
        DimVec p = projective_dim(q, j);
        r.add(p, ms.count(p));
    }
    return r;
}

bool FamilyReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](auto &r) { return r.ok; });
}

const PropertyResult *FamilyReport::find(const std::string &name) const {
    for (auto &r : results)
        if (r.name == name) return &r;
    return nullptr;
}

FamilyReport verify_family(const ExcFamily &f) {
    FamilyReport rep;
    const Quiver &q = f.q;
    const int n = f.n(), m = f.m();
    const bool dyn = is_dynkin(q);
    auto fail = [&](const std::string &name, const std::string &why) {
        for (auto &r : rep.results)
            if (r.name == name) {
                if (r.ok) {
                    r.ok = false;
                    r.detail = why;
                }
                return;
            }
        rep.results.push_back({name, false, why});
    };
    auto pass = [&](const std::string &name) {
        for (auto &r : rep.results)
            if (r.name == name) return;
        rep.results.push_back({name, true, ""});
    };
    auto lbl = [&](const DimVec &v) { return entry_label(q, v); };

    for (int t = 0; t <= m; ++t)
        for (int l = 0; l < n; ++l) {
            const DimVec &v = f.seq[t][l];
            if (!nonneg(v) || euler_form(q, v, v) != 1)
                fail("entries", "column " + std::to_string(t) + " position " + std::to_string(l) + " = " + dim_string(v));
        }
    pass("entries");

    for (int t = 0; t <= m; ++t)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                const DimVec &A = f.seq[t][a], &B = f.seq[t][b];
                if (A == B) fail("exceptional", "repeated entry " + lbl(A) + " in column " + std::to_string(t));
                if (euler_form(q, B, A) != 0)
                    fail("exceptional", "<E_b,E_a> != 0 in column " + std::to_string(t) + " for " + lbl(B) + ", " + lbl(A));
                if (dyn && (module_hom(q, B, A) != 0 || module_ext(q, B, A) != 0))
                    fail("exceptional", "Hom/Ext(E_b,E_a) != 0 in column " + std::to_string(t));
            }
    pass("exceptional");

    {
        Multiset<DimVec> inj, last;
        for (int v = 0; v < n; ++v) {
            if (f.x(v, 0) != projective_dim(q, v)) fail("ends", "column 0 row " + q.name(v) + " is not P");
            inj.add(injective_dim(q, v));
            last.add(f.x(v, m));
        }
        if (!(inj == last)) fail("ends", "last column is not the set of injectives");
        pass("ends");
    }

    for (int v = 0; v < n; ++v)
        for (int t = 0; t <= m; ++t)
            for (int u = t; u <= m; ++u) {
                const DimVec &A = f.x(v, t), &B = f.x(v, u);
                if (euler_form(q, A, B) <= 0)
                    fail("rows nonzero", "<x^(" + std::to_string(t) + "), x^(" + std::to_string(u) + ")> <= 0 on row " + q.name(v));
                if (dyn && module_hom(q, A, B) == 0)
                    fail("rows nonzero", "Hom(" + lbl(A) + "," + lbl(B) + ") = 0 on row " + q.name(v));
            }
    pass("rows nonzero");

    {
        std::set<int> ts;
        for (int a = 0; a < static_cast<int>(q.arrows().size()); ++a) {
            int i = q.arrows()[a].source, j = q.arrows()[a].target, t = f.t[a];
            ts.insert(t);
            if (t < 0 || t >= m) {
                fail("arrow handoff", "t out of range");
                continue;
            }
            if (f.x(j, t + 1) != f.x(i, t)) fail("arrow handoff", "x_j^(t+1) != x_i^(t) for " + f.qbar.arrow_name(a));
            if (euler_form(q, f.x(j, t), f.x(i, t + 1)) != 0)
                fail("arrow handoff", "<x_j^(t), x_i^(t+1)> != 0 for " + f.qbar.arrow_name(a));
            if (dyn && module_hom(q, f.x(j, t), f.x(i, t + 1)) != 0)
                fail("arrow handoff", "Hom(x_j^(t), x_i^(t+1)) != 0 for " + f.qbar.arrow_name(a));
        }
        if (static_cast<int>(ts.size()) != m) fail("arrow handoff", "t is not a bijection onto 0..m-1");
        pass("arrow handoff");
    }

    for (int a = 0; a < static_cast<int>(q.arrows().size()); ++a) {
        const int ta = f.t[a];
        for (int side = 0; side < 2; ++side) {
            const int v = side == 0 ? q.arrows()[a].target : q.arrows()[a].source;
            for (int t = 0; t <= m; ++t)
                for (int u = 0; u <= m; ++u) {
                    // both ends of the arrow change between columns t_a and t_a + 1
                    if (t <= ta && ta < u && f.x(v, t) == f.x(v, u))
                        fail("rows change", "row " + q.name(v) + " constant across t=" + std::to_string(ta) + " of " +
                                           f.qbar.arrow_name(a));
                }
        }
    }
    pass("rows change");

    for (int a = 0; a < f.qbar.size(); ++a)
        for (int b = 0; b < f.qbar.size(); ++b) {
            auto &A = f.qbar.arrows()[a];
            auto &B = f.qbar.arrows()[b];
            if (!A.is_star() && A.target == B.source && !(f.t[a] < f.t[b]))
                fail("t increases", f.qbar.arrow_name(a) + " then " + f.qbar.arrow_name(b));
        }
    pass("t increases");

    for (auto &st : f.stages) {
        const int r = static_cast<int>(st.positions.size());
        for (int t = 0; t <= r; ++t) {
            for (int u = t; u <= r; ++u)
                if (euler_form(q, st.betas[t], st.betas[u]) != 1) fail("beta chain", "<beta_t, beta_t'> != 1");
            if (t >= 1) {
                DimVec xk = projective_dim(q, st.alive[st.positions[t - 1]]);
                if (euler_form(q, st.betas[t], xk) != -1) fail("beta chain", "<beta_t, x_k_t> != -1");
            }
        }
    }
    pass("beta chain");

    {
        const ExcStage &st = f.stages.front();
        if (st.alive.size() == static_cast<size_t>(n))
            for (size_t t = 0; t < st.positions.size(); ++t) {
                ExcSequence got = stage_step_by_braids(q, f.seq[t], st.positions[t]);
                if (got != f.seq[t + 1]) fail("braid replay", "column " + std::to_string(t + 1));
            }
        pass("braid replay");
    }

    std::optional<StripTable> strip;
    if (dyn) strip.emplace(q);
    for (int a = 0; a < f.qbar.size(); ++a) {
        const int i = f.qbar.arrows()[a].source;
        Multiset<DimVec> pb = pibar(f, a);
        Multiset<DimVec> left{projective_dim(q, i)};
        for (int b : f.qbar.in(i)) left += pibar(f, b);
        if (!pb.contains(left)) fail("pibar contains in-blocks", f.qbar.arrow_name(a));
        Multiset<DimVec> env = pibar_envelope(f, a);
        if (!env.contains(pb)) fail("pibar in envelope", f.qbar.arrow_name(a));
        if (strip) {
            auto H = strip->hammock_multiset(strip->projective(i));
            Multiset<DimVec> Hd;
            for (auto &[z, c] : H.counts()) {
                auto lab = strip->label(z);
                if (lab.shift == 0) Hd.add(lab.dim, c);
            }
            for (auto &[z, c] : env.counts())
                if (Hd.count(z) == 0) fail("envelope in hammock", f.qbar.arrow_name(a) + ": " + lbl(z) + " not in H");
        }
        if (!(projective_part(q, pb) == z_projectives(q, injective_dim(q, i))))
            fail("pibar projectives", f.qbar.arrow_name(a));
    }
    pass("pibar contains in-blocks");
    pass("pibar in envelope");
    if (strip) pass("envelope in hammock");
    pass("pibar projectives");
    return rep;
}

Multiset<DimVec> compose_dominant(const ExcFamily &f, const Multiset<DimVec> &Z, const Multiset<int> &arrows) {
    Multiset<DimVec> ms = Z;
    for (auto &[a, c] : arrows.counts())
        for (long long k = 0; k < c; ++k) ms += pibar(f, a);
    return ms;
}

namespace {

// sources of the blocks, from the projective restriction
std::optional<DimVec> block_sources(const ExcFamily &f, const Multiset<DimVec> &ms) {
    const Quiver &q = f.q;
    DimVec gamma = zero_vec(q);
    for (int j = 0; j < q.size(); ++j) gamma[j] = ms.count(projective_dim(q, j));
    DimVec c = zero_vec(q);
    auto &topo = q.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int j = *it;
        Int v = gamma[j];
        for (int i = 0; i < q.size(); ++i)
            if (i != j) v -= c[i] * q.paths(j, i);
        if (v < 0) return std::nullopt;
        c[j] = v;
    }
    return c;
}

void search(const ExcFamily &f, const std::vector<int> &order, size_t idx, Int left_here, int min_rank,
            const DimVec &c, Multiset<DimVec> &residual, Multiset<int> &chosen,
            const std::function<bool(const Multiset<DimVec> &, const Multiset<int> &)> &emit, bool &stop) {
    if (stop) return;
    if (idx == order.size()) {
        if (projective_part(f.q, residual).empty()) stop = emit(residual, chosen);
        return;
    }
    if (left_here == 0) {
        Int next = idx + 1 < order.size() ? c[order[idx + 1]] : 0;
        search(f, order, idx + 1, next, 0, c, residual, chosen, emit, stop);
        return;
    }
    // largest t first; a multiset of arrows is enumerated with non-increasing t
    std::vector<int> outs = f.qbar.out(order[idx]);
    std::sort(outs.begin(), outs.end(), [&](int a, int b) { return f.t[a] > f.t[b]; });
    for (int rank = min_rank; rank < static_cast<int>(outs.size()); ++rank) {
        int a = outs[rank];
        Multiset<DimVec> pb = pibar(f, a);
        if (!residual.contains(pb)) continue;
        residual -= pb;
        chosen.add(a);
        search(f, order, idx, left_here - 1, rank, c, residual, chosen, emit, stop);
        chosen.remove(a);
        residual += pb;
        if (stop) return;
    }
}

int run_search(const ExcFamily &f, const Multiset<DimVec> &ms,
               const std::function<bool(const Multiset<DimVec> &, const Multiset<int> &)> &emit) {
    auto c = block_sources(f, ms);
    if (!c) return -1;
    // sinks first
    std::vector<int> order;
    auto &topo = f.q.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        if ((*c)[*it] > 0) order.push_back(*it);
    Multiset<DimVec> residual = ms;
    Multiset<int> chosen;
    bool stop = false;
    Int first = order.empty() ? 0 : (*c)[order[0]];
    search(f, order, 0, first, 0, *c, residual, chosen, emit, stop);
    return 0;
}

}  // namespace

Decomposition decompose_dominant(const ExcFamily &f, const Multiset<DimVec> &ms) {
    std::optional<Decomposition> found;
    int status = run_search(f, ms, [&](const Multiset<DimVec> &Z, const Multiset<int> &arrows) {
        found = Decomposition{Z, arrows};
        return true;
    });
    if (status < 0) throw DecompositionError("projective part is not a sum of injective dimension vectors", ms);
    if (!found) throw DecompositionError("no decomposition into pi-bar blocks exists", ms);
    return *found;
}

int count_decompositions(const ExcFamily &f, const Multiset<DimVec> &ms, int limit) {
    int count = 0;
    run_search(f, ms, [&](const Multiset<DimVec> &, const Multiset<int> &) { return ++count >= limit; });
    return count;
}

}  // namespace hammock
