#include "hammock/yring.hpp"

#include <stdexcept>

namespace hammock {

Monomial a_monomial(const Quiver &q, int i, Int p) {
    Monomial m = Monomial::of(Var::Y(i, p - 1)) * Monomial::of(Var::Y(i, p + 1));
    for (int j : q.neighbours(i)) m = m * Monomial::of(Var::Y(j, p), -1);
    return m;
}

Var a_var(const HeightFunction &xi, int i) { return Var::A(i, xi.xi.at(i) + 1); }

LaurentPoly a_inv(const HeightFunction &xi, int i) { return LaurentPoly::var(a_var(xi, i), -1); }

LaurentPoly expand_a(const Quiver &q, const LaurentPoly &p) {
    return p.substitute([&](const Var &v) -> std::optional<LaurentPoly> {
        if (v.kind != Var::Kind::A) return std::nullopt;
        return LaurentPoly(a_monomial(q, v.i, v.p));
    });
}

Int y_index(const HeightFunction &xi, const ZQVertex &z) { return 2 * z.m - xi.xi.at(z.v); }

LaurentPoly y_of(const HeightFunction &xi, const ZQVertex &z) {
    return LaurentPoly::var(Var::Y(z.v, y_index(xi, z)));
}

LaurentPoly y_slot(const HeightFunction &xi, int i) { return LaurentPoly::var(Var::Y(i, xi.xi.at(i))); }

std::vector<LaurentPoly> fundamental_truncs(const Quiver &q, const HeightFunction &xi) {
    if (static_cast<int>(xi.xi.size()) != q.size()) throw std::invalid_argument("height function has the wrong size");
    std::vector<LaurentPoly> phi(q.size());
    for (int i : q.topological_order()) {
        LaurentPoly prod(1);
        for (int j : q.in(i)) prod *= phi[j];
        phi[i] = LaurentPoly(1) + a_inv(xi, i) * prod;
    }
    return phi;
}

LaurentPoly fundamental_trunc(const Quiver &q, const HeightFunction &xi, int i) {
    return fundamental_truncs(q, xi).at(i);
}

LaurentPoly fundamental_character(const Quiver &q, const HeightFunction &xi, int i) {
    return y_slot(xi, i) * expand_a(q, fundamental_trunc(q, xi, i));
}

LaurentPoly standard_trunc_renormalized(const Quiver &q, const HeightFunction &xi, const std::vector<int> &vertices) {
    auto phi = fundamental_truncs(q, xi);
    LaurentPoly r(1);
    for (int v : vertices) r *= phi.at(v);
    return r;
}

LaurentPoly standard_trunc(const Quiver &q, const HeightFunction &xi, const std::vector<int> &vertices) {
    LaurentPoly lead(1);
    for (int v : vertices) lead *= y_slot(xi, v);
    return lead * expand_a(q, standard_trunc_renormalized(q, xi, vertices));
}

LaurentPoly tilt_class(const HeightFunction &xi, const std::vector<ZQVertex> &base, const Multiset<int> &tilts) {
    LaurentPoly r(1);
    for (auto &z : base) r *= y_of(xi, z);
    for (auto &[v, c] : tilts.counts()) r *= (LaurentPoly::var(Var::F(v)) * a_inv(xi, v)).pow(c);
    return r;
}

LaurentPoly specialize_F(const LaurentPoly &p, Int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("F specializes to +1 or -1");
    return p.substitute([&](const Var &v) -> std::optional<LaurentPoly> {
        if (v.kind != Var::Kind::F) return std::nullopt;
        return LaurentPoly(value);
    });
}

TSystemReport check_tsystem(const Quiver &q, const HeightFunction &xi) {
    // characters of L(Y_{i, xi(i)-2}) live on the shifted height eta = xi - 2
    HeightFunction eta = xi;
    for (auto &e : eta.xi) e -= 2;
    std::vector<LaurentPoly> chi(q.size());
    for (int i = 0; i < q.size(); ++i) chi[i] = fundamental_character(q, eta, i);

    TSystemReport rep;
    for (int i = 0; i < q.size(); ++i) {
        LaurentPoly lhs = y_slot(xi, i) * chi[i];
        LaurentPoly rhs = y_slot(eta, i) * y_slot(xi, i);
        LaurentPoly prod(1);
        for (int j : q.out(i)) prod *= y_slot(xi, j);
        for (int j : q.in(i)) prod *= chi[j];
        rhs += prod;
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.failed.push_back(i);
            if (rep.detail.empty())
                rep.detail = "vertex " + q.name(i) + ": " + lhs.str(&q) + " != " + rhs.str(&q);
        }
    }
    return rep;
}

}  // namespace hammock
