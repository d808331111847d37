#include "hammock/hom_oracle.hpp"

#include <boost/rational.hpp>
#include <stdexcept>

namespace hammock {

namespace {

using Q = boost::rational<long long>;

int rank(std::vector<std::vector<Q>> a) {
    int r = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c].numerator() != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].numerator() == 0) continue;
            Q f = a[i][c] / a[r][c];
            for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

bool is_tree(const Quiver &q) {
    int ncomp = 0;
    for (int c : q.components()) ncomp = std::max(ncomp, c + 1);
    return static_cast<int>(q.arrows().size()) == q.size() - ncomp;
}

}  // namespace

bool is_thin(const Quiver &q, const DimVec &m) {
    if (static_cast<int>(m.size()) != q.size()) return false;
    std::vector<int> supp;
    for (int i = 0; i < q.size(); ++i) {
        if (m[i] != 0 && m[i] != 1) return false;
        if (m[i]) supp.push_back(i);
    }
    if (supp.empty()) return false;
    std::vector<bool> seen(q.size(), false);
    std::vector<int> stack{supp[0]};
    seen[supp[0]] = true;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : q.neighbours(v))
            if (m[w] && !seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == supp.size();
}

Int brute_force_hom(const Quiver &q, const DimVec &m, const DimVec &n) {
    if (!is_tree(q) || !is_thin(q, m) || !is_thin(q, n))
        throw std::invalid_argument("brute force Hom needs thin modules over a tree quiver");
    std::vector<int> var(q.size(), -1);
    int nv = 0;
    for (int i = 0; i < q.size(); ++i)
        if (m[i] && n[i]) var[i] = nv++;
    if (nv == 0) return 0;
    std::vector<std::vector<Q>> eqs;
    for (auto &a : q.arrows()) {
        int s = a.source, t = a.target;
        if (!(m[s] && n[t])) continue;
        std::vector<Q> row(nv, 0);
        if (m[t]) row[var[t]] += 1;  // f_t composed with M(a)
        if (n[s]) row[var[s]] -= 1;  // N(a) composed with f_s
        eqs.push_back(row);
    }
    return nv - rank(eqs);
}

Int brute_force_ext(const Quiver &q, const DimVec &m, const DimVec &n) {
    return brute_force_hom(q, m, n) - euler_form(q, m, n);
}

Int module_hom(const Quiver &q, const DimVec &m, const DimVec &n) {
    if (is_tree(q) && is_thin(q, m) && is_thin(q, n)) return brute_force_hom(q, m, n);
    return std::max<Int>(0, euler_form(q, m, n));
}

Int module_ext(const Quiver &q, const DimVec &m, const DimVec &n) {
    return module_hom(q, m, n) - euler_form(q, m, n);
}

Int derived_hom(const StripTable &st, const ZQVertex &x, const ZQVertex &y) {
    auto a = st.label(x);
    auto b = st.label(y);
    if (b.shift == a.shift) return module_hom(st.quiver(), a.dim, b.dim);
    if (b.shift == a.shift + 1) return module_ext(st.quiver(), a.dim, b.dim);
    return 0;
}

}  // namespace hammock
