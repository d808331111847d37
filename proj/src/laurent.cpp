#include "hammock/laurent.hpp"

#include <algorithm>

namespace hammock {

namespace {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw LaurentError("coefficient overflow");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw LaurentError("coefficient overflow");
    return r;
}

}  // namespace

std::string var_string(const Var &v, const Quiver *q) {
    std::string nm = q ? q->name(v.i) : std::to_string(v.i);
    switch (v.kind) {
        case Var::Kind::Y: return "Y[" + nm + "," + std::to_string(v.p) + "]";
        case Var::Kind::F: return "F[" + nm + "]";
        case Var::Kind::A: return "A[" + nm + "," + std::to_string(v.p) + "]";
        case Var::Kind::YH: return "yh[" + nm + "]";
        case Var::Kind::U: return "u[" + nm + "]";
        case Var::Kind::C: return "y[" + nm + "]";
    }
    return "?";
}

Monomial Monomial::of(const Var &v, Int e) {
    Monomial m;
    if (e != 0) m.f_.push_back({v, e});
    return m;
}

Int Monomial::exponent(const Var &v) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), v, [](const Term &t, const Var &x) { return t.first < x; });
    return (it != f_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial &o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
            r.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
            r.f_.push_back(o.f_[j++]);
        } else {
            Int e = f_[i].second + o.f_[j].second;
            if (e != 0) r.f_.push_back({f_[i].first, e});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto &t : r.f_) t.second = -t.second;
    return r;
}

Monomial Monomial::pow(Int k) const {
    if (k == 0) return {};
    Monomial r = *this;
    for (auto &t : r.f_) t.second = checked_mul(t.second, k);
    return r;
}

bool operator<(const Monomial &a, const Monomial &b) {
    size_t i = 0, j = 0;
    while (i < a.f_.size() || j < b.f_.size()) {
        if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) return a.f_[i].second < 0;
        if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) return b.f_[j].second > 0;
        if (a.f_[i].second != b.f_[j].second) return a.f_[i].second < b.f_[j].second;
        ++i;
        ++j;
    }
    return false;
}

std::string Monomial::str(const Quiver *q) const {
    if (f_.empty()) return "1";
    std::string s;
    for (auto &[v, e] : f_) {
        if (!s.empty()) s += " ";
        s += var_string(v, q);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

LaurentPoly::LaurentPoly(Int c) {
    if (c != 0) t_[Monomial()] = c;
}

LaurentPoly::LaurentPoly(const Monomial &m, Int c) {
    if (c != 0) t_[m] = c;
}

Int LaurentPoly::coeff(const Monomial &m) const {
    auto it = t_.find(m);
    return it == t_.end() ? 0 : it->second;
}

std::optional<std::pair<Monomial, Int>> LaurentPoly::as_term() const {
    if (t_.size() != 1) return std::nullopt;
    return *t_.begin();
}

void LaurentPoly::add_term(const Monomial &m, Int c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) t_.erase(it);
    }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    for (auto &[m, c] : o.t_) add_term(m, c);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
    for (auto &[m, c] : o.t_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly r;
    for (auto &[ma, ca] : a.t_)
        for (auto &[mb, cb] : b.t_) r.add_term(ma * mb, checked_mul(ca, cb));
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto &[m, c] : t_) r.t_[m] = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(Int k) const {
    if (k < 0) {
        auto t = as_term();
        if (!t || (t->second != 1 && t->second != -1))
            throw LaurentError("negative power of a non-unit");
        Int c = (-k) % 2 == 1 ? t->second : 1;
        return LaurentPoly(t->first.pow(k), c);
    }
    LaurentPoly r(1), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::function<std::optional<LaurentPoly>(const Var &)> &f) const {
    LaurentPoly r;
    for (auto &[m, c] : t_) {
        LaurentPoly term(Monomial(), c);
        Monomial kept;
        for (auto &[v, e] : m.factors()) {
            auto img = f(v);
            if (img)
                term = term * img->pow(e);
            else
                kept = kept * Monomial::of(v, e);
        }
        r += term * LaurentPoly(kept);
    }
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly &den) const {
    if (den.is_zero()) throw LaurentError("division by zero");
    if (is_zero()) return {};

    // Newton box of the quotient, per variable
    std::map<Var, std::pair<Int, Int>> nb, db;
    auto box = [](const Terms &t, std::map<Var, std::pair<Int, Int>> &out) {
        std::vector<Var> vars;
        for (auto &[m, c] : t)
            for (auto &[v, e] : m.factors()) vars.push_back(v);
        for (auto &v : vars) out[v] = {0, 0};
        bool first = true;
        for (auto &[m, c] : t) {
            for (auto &[v, lohi] : out) {
                Int e = m.exponent(v);
                if (first) lohi = {e, e};
                lohi.first = std::min(lohi.first, e);
                lohi.second = std::max(lohi.second, e);
            }
            first = false;
        }
    };
    box(t_, nb);
    box(den.t_, db);
    std::map<Var, std::pair<Int, Int>> qb;
    for (auto &[v, r] : nb) qb[v] = r;
    for (auto &[v, r] : db) qb.try_emplace(v, std::pair<Int, Int>{0, 0});
    for (auto &[v, r] : qb) {
        auto n = nb.count(v) ? nb[v] : std::pair<Int, Int>{0, 0};
        auto d = db.count(v) ? db[v] : std::pair<Int, Int>{0, 0};
        r = {n.first - d.first, n.second - d.second};
        if (r.first > r.second) throw LaurentError("not divisible");
    }

    auto [dlm, dlc] = *den.t_.rbegin();
    LaurentPoly rem = *this, quo;
    while (!rem.is_zero()) {
        auto [rlm, rlc] = *rem.t_.rbegin();
        if (rlc % dlc != 0) throw LaurentError("not divisible");
        Monomial t = rlm * dlm.inverse();
        for (auto &[v, e] : t.factors()) {
            auto it = qb.find(v);
            if (it == qb.end() || e < it->second.first || e > it->second.second)
                throw LaurentError("not divisible");
        }
        for (auto &[v, r] : qb)
            if (t.exponent(v) < r.first || t.exponent(v) > r.second) throw LaurentError("not divisible");
        LaurentPoly step(t, rlc / dlc);
        quo += step;
        rem -= step * den;
    }
    return quo;
}

std::string LaurentPoly::str(const Quiver *q) const {
    if (t_.empty()) return "0";
    std::string s;
    // descending, so the leading term comes first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto &[m, c] = *it;
        Int a = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (m.is_one()) {
            s += std::to_string(a);
        } else {
            if (a != 1) s += std::to_string(a) + " ";
            s += m.str(q);
        }
    }
    return s;
}

}  // namespace hammock
