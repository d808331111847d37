#include "hammock/complexes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hammock {

StandardSpec parse_spec(const ExtendedQuiver &qbar, const std::string &list) {
    StandardSpec spec;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) spec.arrows.add(qbar.parse_arrow(tok));
        tok.clear();
    };
    for (char ch : list) {
        if (ch == ',' || ch == ';' || ch == ' ' || ch == '\t' || ch == '\n')
            flush();
        else
            tok += ch;
    }
    flush();
    return spec;
}

std::string spec_string(const ExtendedQuiver &qbar, const StandardSpec &spec) {
    std::string s;
    for (int a : spec.arrows.elements()) {
        if (!s.empty()) s += ",";
        s += qbar.arrow_name(a);
    }
    return s;
}

DimVec spec_dvec(const ExtendedQuiver &qbar, const StandardSpec &spec) {
    DimVec d = zero_vec(qbar.base());
    for (int a : spec.arrows.elements()) d = d + injective_dim(qbar.base(), qbar.arrows().at(a).source);
    return d;
}

std::vector<int> spec_vertices(const ExtendedQuiver &qbar, const StandardSpec &spec) {
    std::vector<int> r;
    for (int a : spec.arrows.elements()) r.push_back(qbar.arrows().at(a).source);
    return r;
}

size_t ComplexSkeleton::object_count() const {
    size_t n = 0;
    for (auto &[deg, objs] : degrees) n += objs.size();
    return n;
}

namespace {

struct PeeledSpec {
    int vertex;
    StandardSpec rest;
    StandardSpec n;
};

PeeledSpec peel(const ExtendedQuiver &qbar, const StandardSpec &spec) {
    int first = spec.arrows.elements().front();
    PeeledSpec p{qbar.arrows().at(first).source, spec, {}};
    p.rest.arrows.remove(first);
    p.n = p.rest;
    for (int b : qbar.in(p.vertex)) p.n.arrows.add(b);
    return p;
}

void check_arrows(const ExtendedQuiver &qbar, const StandardSpec &spec) {
    for (auto &[a, c] : spec.arrows.counts())
        if (a < 0 || a >= qbar.size()) throw std::out_of_range("spec arrow out of range");
}

}  // namespace

std::map<int, std::vector<Multiset<int>>> standard_tilts(const ExtendedQuiver &qbar, const StandardSpec &spec) {
    check_arrows(qbar, spec);
    std::map<int, std::vector<Multiset<int>>> out;
    if (spec.arrows.empty()) {
        out[0].push_back({});
        return out;
    }
    PeeledSpec p = peel(qbar, spec);
    out = standard_tilts(qbar, p.rest);
    for (auto &[deg, list] : standard_tilts(qbar, p.n))
        for (auto t : list) {
            t.add(p.vertex);
            out[deg + 1].push_back(t);
        }
    for (auto &[deg, list] : out) std::sort(list.begin(), list.end());
    return out;
}

ComplexSkeleton standard_complex(const ExcFamily &f, const StandardSpec &spec, PiVariant variant) {
    const Quiver &q = f.q;
    ComplexSkeleton skel;
    skel.arrows = spec.arrows.elements();
    for (int a : skel.arrows) {
        skel.leading.push_back(f.qbar.arrows().at(a).source);
        auto part = pibar_list(f, a, variant);
        skel.base.insert(skel.base.end(), part.begin(), part.end());
    }
    for (auto &[deg, list] : standard_tilts(f.qbar, spec))
        for (auto &t : list) {
            TiltedObject obj{t, skel.base, true};
            for (auto &[v, c] : t.counts()) {
                DimVec p = projective_dim(q, v);
                DimVec inj = injective_dim(q, v);
                Int left = c;
                for (auto &z : obj.tensor)
                    if (left > 0 && z == p) {
                        z = inj;
                        --left;
                    }
                if (left > 0) obj.tilts_fit = false;
            }
            skel.degrees[deg].push_back(std::move(obj));
        }
    return skel;
}

LaurentPoly leading_monomial(const HeightFunction &xi, const ComplexSkeleton &skel) {
    LaurentPoly r(1);
    for (int v : skel.leading) r *= y_slot(xi, v);
    return r;
}

LaurentPoly object_class(const HeightFunction &xi, const ComplexSkeleton &skel, const TiltedObject &obj) {
    std::vector<ZQVertex> slots;
    for (int v : skel.leading) slots.push_back({v, xi.xi.at(v)});
    return tilt_class(xi, slots, obj.tilts);
}

LaurentPoly euler_char(const HeightFunction &xi, const ComplexSkeleton &skel) {
    LaurentPoly r;
    for (auto &[deg, objs] : skel.degrees)
        for (auto &o : objs) {
            LaurentPoly c = object_class(xi, skel, o);
            if (deg % 2 == 0)
                r += c;
            else
                r -= c;
        }
    return r;
}

namespace {

LaurentPoly chi_standard(const ExtendedQuiver &qbar, const HeightFunction &xi, const StandardSpec &spec,
                         std::map<std::vector<int>, LaurentPoly> &memo) {
    if (spec.arrows.empty()) return LaurentPoly(1);
    auto key = spec.arrows.elements();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    PeeledSpec p = peel(qbar, spec);
    LaurentPoly r = chi_standard(qbar, xi, p.rest, memo) -
                    LaurentPoly::var(Var::F(p.vertex)) * a_inv(xi, p.vertex) * chi_standard(qbar, xi, p.n, memo);
    memo.emplace(key, r);
    return r;
}

}  // namespace

LaurentPoly euler_char_standard(const ExtendedQuiver &qbar, const HeightFunction &xi, const StandardSpec &spec) {
    check_arrows(qbar, spec);
    std::map<std::vector<int>, LaurentPoly> memo;
    return chi_standard(qbar, xi, spec, memo);
}

std::string weighted_string(const WeightedFn &h) { return "c=" + dim_string(h.c) + " d=" + dim_string(h.d); }

DimVec omega_weight(const Quiver &q, const WeightedFn &h) {
    if (!nonneg(h.c) || !nonneg(h.d)) throw std::domain_error("weighted function is not dominant: " + weighted_string(h));
    DimVec a = zero_vec(q);
    auto &topo = q.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int i = *it;
        Int s = h.c[i] - h.d[i];
        for (int j : q.out(i)) s += a[j];
        a[i] = std::max<Int>(0, s);
    }
    return a;
}

WeightedFn cd_add_tauinv(const WeightedFn &h, int i) {
    WeightedFn r = h;
    r.d.at(i) += 1;
    return r;
}

WeightedFn cd_subtract_delta(const Quiver &q, const WeightedFn &h, int i) {
    WeightedFn r = h;
    r.c.at(i) -= 1;
    r.d.at(i) -= 1;
    for (int k : q.in(i)) r.c[k] += 1;
    for (int k : q.out(i)) r.d[k] += 1;
    if (!nonneg(r.c) || !nonneg(r.d))
        throw std::domain_error("subtracting delta at " + q.name(i) + " breaks dominance: " + weighted_string(r));
    return r;
}

WeightedFn canonical_cd_for(const Quiver &q, const DimVec &beta) {
    if (static_cast<int>(beta.size()) != q.size() || !nonneg(beta))
        throw std::invalid_argument("beta must be a nonnegative vector on the quiver");
    WeightedFn h{zero_vec(q), zero_vec(q)};
    for (int i = 0; i < q.size(); ++i) {
        Int s = 0;
        for (int j : q.out(i)) s += beta[j];
        h.c[i] = std::max<Int>(0, beta[i] - s);
        h.d[i] = std::max<Int>(0, s - beta[i]);
    }
    if (omega_weight(q, h) != beta) throw std::logic_error("canonical weighted function misses " + dim_string(beta));
    return h;
}

std::vector<WeightedFn> omega_fiber(const Quiver &q, const DimVec &beta, Int bound) {
    const int n = q.size();
    std::vector<WeightedFn> out;
    std::vector<Int> digits(2 * n, 0);
    while (true) {
        WeightedFn h{DimVec(digits.begin(), digits.begin() + n), DimVec(digits.begin() + n, digits.end())};
        if (omega_weight(q, h) == beta) out.push_back(h);
        int k = 0;
        while (k < 2 * n && digits[k] == bound) digits[k++] = 0;
        if (k == 2 * n) break;
        ++digits[k];
    }
    return out;
}

std::vector<int> support_sinks(const Quiver &q, const DimVec &beta) {
    std::vector<int> r;
    for (int i = 0; i < q.size(); ++i) {
        if (beta[i] == 0) continue;
        bool sink = true;
        for (int j : q.out(i))
            if (beta[j] != 0) sink = false;
        if (sink) r.push_back(i);
    }
    return r;
}

int smallest_sink(const std::vector<int> &sinks) { return sinks.front(); }

namespace {

struct Step {
    int sink;
    WeightedFn plus;   // h + h_{tau^-1 x_i}
    WeightedFn minus;  // h + h_{tau^-1 x_i} - delta_{x_i}
};

Step step(const Quiver &q, const WeightedFn &h, const DimVec &beta, int i) {
    Step s{i, cd_add_tauinv(h, i), {}};
    s.minus = cd_subtract_delta(q, s.plus, i);
    if (total(omega_weight(q, s.plus)) >= total(beta) || total(omega_weight(q, s.minus)) >= total(beta))
        throw std::logic_error("omega weight did not decrease at " + weighted_string(h));
    return s;
}

LaurentPoly tilt_term(const HeightFunction &xi, int i) { return LaurentPoly::var(Var::F(i)) * a_inv(xi, i); }

LaurentPoly simple_rec(const Quiver &q, const HeightFunction &xi, const WeightedFn &h, const SinkChooser &choose,
                       std::map<WeightedFn, LaurentPoly> &memo) {
    DimVec beta = omega_weight(q, h);
    if (is_zero(beta)) return LaurentPoly(1);
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    auto sinks = support_sinks(q, beta);
    int i = choose(sinks);
    if (std::find(sinks.begin(), sinks.end(), i) == sinks.end()) throw std::invalid_argument("chooser returned a non-sink");
    Step s = step(q, h, beta, i);
    LaurentPoly r = simple_rec(q, xi, s.plus, choose, memo) - tilt_term(xi, i) * simple_rec(q, xi, s.minus, choose, memo);
    memo.emplace(h, r);
    return r;
}

std::set<LaurentPoly> simple_all_rec(const Quiver &q, const HeightFunction &xi, const WeightedFn &h,
                                     std::map<WeightedFn, std::set<LaurentPoly>> &memo) {
    DimVec beta = omega_weight(q, h);
    if (is_zero(beta)) return {LaurentPoly(1)};
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    std::set<LaurentPoly> out;
    for (int i : support_sinks(q, beta)) {
        Step s = step(q, h, beta, i);
        auto a = simple_all_rec(q, xi, s.plus, memo);
        auto b = simple_all_rec(q, xi, s.minus, memo);
        for (auto &x : a)
            for (auto &y : b) out.insert(x - tilt_term(xi, i) * y);
    }
    memo.emplace(h, out);
    return out;
}

}  // namespace

LaurentPoly simple_complex_char(const Quiver &q, const HeightFunction &xi, const WeightedFn &h,
                                const SinkChooser &choose) {
    std::map<WeightedFn, LaurentPoly> memo;
    return simple_rec(q, xi, h, choose, memo);
}

std::set<LaurentPoly> simple_complex_char_all(const Quiver &q, const HeightFunction &xi, const WeightedFn &h) {
    std::map<WeightedFn, std::set<LaurentPoly>> memo;
    return simple_all_rec(q, xi, h, memo);
}

LaurentPoly a_to_yhat(const LaurentPoly &p) {
    return p.substitute([](const Var &v) -> std::optional<LaurentPoly> {
        if (v.kind != Var::Kind::A) return std::nullopt;
        return LaurentPoly::var(Var::YH(v.i), -1);
    });
}

namespace {

std::string dot_escape(const std::string &s) {
    std::string r;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') r += '\\';
        r += ch;
    }
    return r;
}

// the single vertex v with b = a + {v}, or -1
int one_step(const Multiset<int> &a, const Multiset<int> &b) {
    if (b.size() != a.size() + 1) return -1;
    for (auto &[v, c] : b.counts()) {
        Multiset<int> t = a;
        t.add(v);
        if (t == b) return v;
    }
    return -1;
}

}  // namespace

std::string render_dot(const Quiver &q, const HeightFunction &xi, const ComplexSkeleton &skel) {
    std::ostringstream os;
    os << "digraph complex {\n  rankdir=TB;\n  node [shape=box];\n";
    auto id = [](int deg, size_t k) { return "n" + std::to_string(deg) + "_" + std::to_string(k); };
    for (auto &[deg, objs] : skel.degrees)
        for (size_t k = 0; k < objs.size(); ++k) {
            std::string factors;
            for (auto &z : objs[k].tensor) {
                if (!factors.empty()) factors += " (x) ";
                factors += entry_label(q, z);
            }
            if (factors.empty()) factors = "1";
            std::string cls = expand_a(q, object_class(xi, skel, objs[k])).str(&q);
            os << "  " << id(deg, k) << " [label=\"" << dot_escape(factors) << "\\n" << dot_escape(cls)
               << "\"];\n";
        }
    for (auto &[deg, objs] : skel.degrees) {
        auto next = skel.degrees.find(deg + 1);
        if (next == skel.degrees.end()) continue;
        for (size_t a = 0; a < objs.size(); ++a)
            for (size_t b = 0; b < next->second.size(); ++b) {
                int v = one_step(objs[a].tilts, next->second[b].tilts);
                if (v >= 0)
                    os << "  " << id(deg, a) << " -> " << id(deg + 1, b) << " [label=\"" << dot_escape(q.name(v))
                       << "\"];\n";
            }
    }
    os << "}\n";
    return os.str();
}

}  // namespace hammock
