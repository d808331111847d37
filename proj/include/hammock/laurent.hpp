#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hammock/quiver.hpp"

namespace hammock {

// Y[i,p], F[i], A[i,p] (formal, expanded on demand), yh[i] (y-hat),
// u[i] (initial cluster variable), y[i] (principal coefficient)
struct Var {
    enum class Kind { Y, F, A, YH, U, C };
    Kind kind = Kind::Y;
    int i = 0;
    Int p = 0;

    static Var Y(int i, Int p) { return {Kind::Y, i, p}; }
    static Var F(int i) { return {Kind::F, i, 0}; }
    static Var A(int i, Int p) { return {Kind::A, i, p}; }
    static Var YH(int i) { return {Kind::YH, i, 0}; }
    static Var U(int i) { return {Kind::U, i, 0}; }
    static Var C(int i) { return {Kind::C, i, 0}; }

    friend auto operator<=>(const Var &, const Var &) = default;
};

std::string var_string(const Var &v, const Quiver *q = nullptr);

// sorted by variable, no zero exponents
class Monomial {
public:
    using Term = std::pair<Var, Int>;
    Monomial() = default;
    static Monomial of(const Var &v, Int e = 1);

    const std::vector<Term> &factors() const { return f_; }
    Int exponent(const Var &v) const;
    bool is_one() const { return f_.empty(); }

    Monomial operator*(const Monomial &o) const;
    Monomial inverse() const;
    Monomial pow(Int k) const;

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.f_ == b.f_; }
    // lex on exponent vectors; a group order
    friend bool operator<(const Monomial &a, const Monomial &b);
    std::string str(const Quiver *q = nullptr) const;

private:
    std::vector<Term> f_;
};

class LaurentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LaurentPoly {
public:
    using Terms = std::map<Monomial, Int>;

    LaurentPoly() = default;
    LaurentPoly(Int c);
    LaurentPoly(const Monomial &m, Int c = 1);
    static LaurentPoly var(const Var &v, Int e = 1) { return LaurentPoly(Monomial::of(v, e)); }

    const Terms &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    Int coeff(const Monomial &m) const;
    std::optional<std::pair<Monomial, Int>> as_term() const;

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    LaurentPoly operator-() const;
    LaurentPoly pow(Int k) const;

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.t_ == b.t_; }
    friend bool operator<(const LaurentPoly &a, const LaurentPoly &b) { return a.t_ < b.t_; }

    // replace variables; a variable raised to a negative power needs a
    // monomial image (a unit)
    LaurentPoly substitute(const std::function<std::optional<LaurentPoly>(const Var &)> &f) const;
    // exact quotient; throws LaurentError when den does not divide *this
    LaurentPoly divide_exact(const LaurentPoly &den) const;

    std::string str(const Quiver *q = nullptr) const;

private:
    void add_term(const Monomial &m, Int c);
    Terms t_;
};

}  // namespace hammock
