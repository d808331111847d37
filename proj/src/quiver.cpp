#include "hammock/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hammock {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

void check_size(const Quiver &q, const DimVec &a) {
    if (static_cast<int>(a.size()) != q.size())
        throw QuiverError(QuiverError::Kind::Mismatch,
                          "dimension vector of length " + std::to_string(a.size()) +
                              " for a quiver with " + std::to_string(q.size()) + " vertices");
}

}  // namespace

Quiver::Quiver(std::vector<std::string> names, std::vector<Arrow> arrows)
    : names_(std::move(names)), arrows_(std::move(arrows)) {
    const int n = size();
    {
        std::set<std::string> seen;
        for (auto &nm : names_)
            if (!seen.insert(nm).second)
                throw QuiverError(QuiverError::Kind::Parse, "vertex declared twice: " + nm);
    }
    out_.assign(n, {});
    in_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto &a : arrows_) {
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
            throw QuiverError(QuiverError::Kind::UnknownVertex, "arrow endpoint out of range");
        if (a.source == a.target)
            throw QuiverError(QuiverError::Kind::Cycle, "loop at " + names_[a.source]);
        if (!seen.insert({a.source, a.target}).second)
            throw QuiverError(QuiverError::Kind::MultipleEdge,
                              "multiple arrows " + names_[a.source] + "->" + names_[a.target]);
        if (seen.count({a.target, a.source}))
            throw QuiverError(QuiverError::Kind::Cycle,
                              "2-cycle " + names_[a.source] + "<->" + names_[a.target]);
        out_[a.source].push_back(a.target);
        in_[a.target].push_back(a.source);
    }

    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(in_[v].size());
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        topo_.push_back(v);
        for (int w : out_[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(topo_.size()) != n)
        throw QuiverError(QuiverError::Kind::Cycle, "quiver has an oriented cycle");

    paths_.assign(n, std::vector<Int>(n, 0));
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        int i = *it;
        paths_[i][i] = 1;
        for (int k : out_[i])
            for (int j = 0; j < n; ++j) paths_[i][j] += paths_[k][j];
    }

    comp_.assign(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp_[s] >= 0) continue;
        std::vector<int> stack{s};
        comp_[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : neighbours(v))
                if (comp_[w] < 0) {
                    comp_[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
}

int Quiver::index(const std::string &nm) const {
    auto f = find(nm);
    if (!f) throw QuiverError(QuiverError::Kind::UnknownVertex, "unknown vertex: " + nm);
    return *f;
}

std::optional<int> Quiver::find(const std::string &nm) const {
    for (int v = 0; v < size(); ++v)
        if (names_[v] == nm) return v;
    return std::nullopt;
}

bool Quiver::has_arrow(int i, int j) const {
    auto &o = out_.at(i);
    return std::find(o.begin(), o.end(), j) != o.end();
}

std::vector<int> Quiver::neighbours(int v) const {
    std::vector<int> r = out_.at(v);
    r.insert(r.end(), in_.at(v).begin(), in_.at(v).end());
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> Quiver::sinks() const {
    std::vector<int> r;
    for (int v = 0; v < size(); ++v)
        if (is_sink(v)) r.push_back(v);
    return r;
}

std::vector<int> Quiver::sources() const {
    std::vector<int> r;
    for (int v = 0; v < size(); ++v)
        if (is_source(v)) r.push_back(v);
    return r;
}

void Quiver::set_declared_height(HeightFunction h) {
    if (static_cast<int>(h.xi.size()) != size())
        throw QuiverError(QuiverError::Kind::Height, "height must list every vertex");
    for (auto &a : arrows_)
        if (h.xi[a.target] != h.xi[a.source] - 1)
            throw QuiverError(QuiverError::Kind::Height,
                              "height violates xi(j) = xi(i) - 1 on " + names_[a.source] + "->" +
                                  names_[a.target]);
    height_ = std::move(h);
}

namespace {

Quiver build(std::vector<std::string> names, bool names_fixed,
             const std::vector<std::pair<std::string, std::string>> &edges,
             const std::vector<std::pair<std::string, Int>> &height) {
    auto lookup = [&](const std::string &nm) -> int {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == nm) return static_cast<int>(i);
        if (names_fixed)
            throw QuiverError(QuiverError::Kind::UnknownVertex, "undeclared vertex: " + nm);
        names.push_back(nm);
        return static_cast<int>(names.size()) - 1;
    };
    std::vector<Arrow> arrows;
    for (auto &[s, t] : edges) {
        int a = lookup(s);
        int b = lookup(t);
        arrows.push_back({a, b});
    }
    Quiver q(names, arrows);
    if (!height.empty()) {
        HeightFunction h;
        h.xi.assign(q.size(), 0);
        std::vector<bool> got(q.size(), false);
        for (auto &[nm, val] : height) {
            int v = q.index(nm);
            h.xi[v] = val;
            got[v] = true;
        }
        if (std::find(got.begin(), got.end(), false) != got.end())
            throw QuiverError(QuiverError::Kind::Height, "height must list every vertex");
        q.set_declared_height(h);
    }
    return q;
}

std::string json_name(const nlohmann::json &j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw QuiverError(QuiverError::Kind::Parse, "vertex names must be strings or integers");
}

Quiver load_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception &e) {
        throw QuiverError(QuiverError::Kind::Parse, std::string("bad JSON: ") + e.what());
    }
    std::vector<std::string> names;
    bool fixed = false;
    if (doc.contains("vertices")) {
        fixed = true;
        for (auto &v : doc["vertices"]) names.push_back(json_name(v));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (doc.contains("arrows")) {
        for (auto &a : doc["arrows"]) {
            if (a.is_array() && a.size() == 2) {
                edges.emplace_back(json_name(a[0]), json_name(a[1]));
            } else if (a.is_object() && a.contains("source") && a.contains("target")) {
                edges.emplace_back(json_name(a["source"]), json_name(a["target"]));
            } else {
                throw QuiverError(QuiverError::Kind::Parse, "arrow must be [s, t]");
            }
        }
    }
    std::vector<std::pair<std::string, Int>> height;
    if (doc.contains("height")) {
        for (auto &[k, v] : doc["height"].items()) {
            if (!v.is_number_integer())
                throw QuiverError(QuiverError::Kind::Parse, "height values must be integers");
            height.emplace_back(k, v.get<Int>());
        }
    }
    return build(names, fixed, edges, height);
}

}  // namespace

Quiver load_quiver(const std::string &text) {
    std::string t = trim(text);
    if (!t.empty() && t[0] == '{') return load_json(t);

    std::vector<std::string> names;
    bool fixed = false;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, Int>> height;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        if (line.rfind("vertices:", 0) == 0) {
            std::istringstream ws(line.substr(9));
            std::string w;
            fixed = true;
            while (ws >> w) {
                if (w.back() == ',') w.pop_back();
                if (!w.empty()) names.push_back(w);
            }
            continue;
        }
        if (line.rfind("height:", 0) == 0) {
            std::istringstream ws(line.substr(7));
            std::string w;
            while (ws >> w) {
                if (w.back() == ',') w.pop_back();
                auto eq = w.find('=');
                if (eq == std::string::npos)
                    throw QuiverError(QuiverError::Kind::Parse, "height entry needs name=value: " + w);
                try {
                    height.emplace_back(w.substr(0, eq), std::stoll(w.substr(eq + 1)));
                } catch (const std::logic_error &) {
                    throw QuiverError(QuiverError::Kind::Parse, "bad height value: " + w);
                }
            }
            continue;
        }
        std::istringstream ts(line);
        std::string tok;
        while (std::getline(ts, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            auto p = tok.find("->");
            if (p == std::string::npos)
                throw QuiverError(QuiverError::Kind::Parse, "expected an arrow a->b, got '" + tok + "'");
            std::string s = trim(tok.substr(0, p));
            std::string d = trim(tok.substr(p + 2));
            if (s.empty() || d.empty() || d.find("->") != std::string::npos)
                throw QuiverError(QuiverError::Kind::Parse, "malformed arrow '" + tok + "'");
            edges.emplace_back(s, d);
        }
    }
    return build(names, fixed, edges, height);
}

Quiver load_quiver_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw QuiverError(QuiverError::Kind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return load_quiver(ss.str());
}

DimVec zero_vec(const Quiver &q) { return DimVec(q.size(), 0); }

DimVec alpha(const Quiver &q, int i) {
    DimVec v = zero_vec(q);
    v.at(i) = 1;
    return v;
}

DimVec projective_dim(const Quiver &q, int i) {
    DimVec v = zero_vec(q);
    for (int j = 0; j < q.size(); ++j) v[j] = q.paths(i, j);
    return v;
}

DimVec injective_dim(const Quiver &q, int i) {
    DimVec v = zero_vec(q);
    for (int j = 0; j < q.size(); ++j) v[j] = q.paths(j, i);
    return v;
}

Int euler_form(const Quiver &q, const DimVec &a, const DimVec &b) {
    check_size(q, a);
    check_size(q, b);
    Int r = 0;
    for (int i = 0; i < q.size(); ++i) r += a[i] * b[i];
    for (auto &ar : q.arrows()) r -= a[ar.source] * b[ar.target];
    return r;
}

Int symmetric_form(const Quiver &q, const DimVec &a, const DimVec &b) {
    return euler_form(q, a, b) + euler_form(q, b, a);
}

DimVec reflect(const Quiver &q, const DimVec &beta, const DimVec &v) {
    if (euler_form(q, beta, beta) != 1)
        throw QuiverError(QuiverError::Kind::NotRoot, "reflection along a non-real root " + dim_string(beta));
    return v - symmetric_form(q, v, beta) * beta;
}

bool is_real_root(const Quiver &q, const DimVec &v) { return euler_form(q, v, v) == 1; }

Subquiver full_subquiver(const Quiver &q, const std::vector<int> &vertices) {
    std::vector<int> local(q.size(), -1);
    std::vector<std::string> names;
    for (size_t k = 0; k < vertices.size(); ++k) {
        local[vertices[k]] = static_cast<int>(k);
        names.push_back(q.name(vertices[k]));
    }
    std::vector<Arrow> arrows;
    for (auto &a : q.arrows())
        if (local[a.source] >= 0 && local[a.target] >= 0) arrows.push_back({local[a.source], local[a.target]});
    Subquiver s{Quiver(names, arrows), vertices, {}, {}};
    for (int k : s.quiver.sinks()) s.sinks.push_back(vertices[k]);
    for (int k : s.quiver.sources()) s.sources.push_back(vertices[k]);
    return s;
}

Subquiver support_subquiver(const Quiver &q, const DimVec &beta) {
    check_size(q, beta);
    std::vector<int> vs;
    for (int i = 0; i < q.size(); ++i) {
        if (beta[i] < 0) throw QuiverError(QuiverError::Kind::NotRoot, "negative entry in " + dim_string(beta));
        if (beta[i] > 0) vs.push_back(i);
    }
    return full_subquiver(q, vs);
}

std::optional<HeightFunction> height_function(const Quiver &q) {
    const int n = q.size();
    HeightFunction h;
    h.xi.assign(n, 0);
    std::vector<bool> set(n, false);
    for (int s = 0; s < n; ++s) {
        if (set[s]) continue;
        set[s] = true;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : q.out(v)) {
                if (!set[w]) {
                    set[w] = true;
                    h.xi[w] = h.xi[v] - 1;
                    stack.push_back(w);
                } else if (h.xi[w] != h.xi[v] - 1) {
                    return std::nullopt;
                }
            }
            for (int w : q.in(v)) {
                if (!set[w]) {
                    set[w] = true;
                    h.xi[w] = h.xi[v] + 1;
                    stack.push_back(w);
                } else if (h.xi[w] != h.xi[v] + 1) {
                    return std::nullopt;
                }
            }
        }
    }
    return h;
}

HeightFunction effective_height(const Quiver &q) {
    if (q.declared_height()) return *q.declared_height();
    auto h = height_function(q);
    if (!h) throw QuiverError(QuiverError::Kind::Height, "quiver admits no height function");
    return *h;
}

ExtendedQuiver::ExtendedQuiver(const Quiver &q) : q_(q) {
    for (auto &a : q.arrows()) arrows_.push_back({a.source, a.target});
    for (int v = 0; v < q.size(); ++v)
        if (q.is_sink(v)) arrows_.push_back({v, kStar});
}

std::string ExtendedQuiver::arrow_name(int a) const {
    auto &b = arrows_.at(a);
    return q_.name(b.source) + "->" + (b.is_star() ? std::string("*") : q_.name(b.target));
}

int ExtendedQuiver::parse_arrow(const std::string &s) const {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    for (int a = 0; a < size(); ++a)
        if (arrow_name(a) == t) return a;
    throw QuiverError(QuiverError::Kind::UnknownVertex, "not an arrow of the extended quiver: " + s);
}

std::vector<int> ExtendedQuiver::out(int v) const {
    std::vector<int> r;
    for (int a = 0; a < size(); ++a)
        if (arrows_[a].source == v) r.push_back(a);
    return r;
}

std::vector<int> ExtendedQuiver::in(int v) const {
    std::vector<int> r;
    for (int a = 0; a < size(); ++a)
        if (arrows_[a].target == v) r.push_back(a);
    return r;
}

int ExtendedQuiver::star_of(int v) const {
    for (int a = 0; a < size(); ++a)
        if (arrows_[a].source == v && arrows_[a].is_star()) return a;
    return -1;
}

std::vector<std::vector<int>> ExtendedQuiver::in_paths(int v) const {
    std::vector<std::vector<int>> r;
    std::function<void(int, std::vector<int> &)> grow = [&](int head, std::vector<int> &suffix) {
        for (int a : in(head)) {
            suffix.insert(suffix.begin(), a);
            r.push_back(suffix);
            grow(arrows_[a].source, suffix);
            suffix.erase(suffix.begin());
        }
    };
    std::vector<int> suffix;
    grow(v, suffix);
    return r;
}

std::string dim_string(const DimVec &v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

DimVec parse_dim(const Quiver &q, const std::string &csv) {
    DimVec v;
    std::string s;
    for (char c : csv)
        if (c != '(' && c != ')' && c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error &) {
            throw QuiverError(QuiverError::Kind::Parse, "bad dimension vector entry '" + tok + "'");
        }
    }
    check_size(q, v);
    return v;
}

DimVec operator+(const DimVec &a, const DimVec &b) {
    DimVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

DimVec operator-(const DimVec &a, const DimVec &b) {
    DimVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
    return r;
}

DimVec operator*(Int k, const DimVec &a) {
    DimVec r(a);
    for (auto &x : r) x *= k;
    return r;
}

bool nonneg(const DimVec &a) {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x >= 0; });
}

bool is_zero(const DimVec &a) {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

Int total(const DimVec &a) { return std::accumulate(a.begin(), a.end(), Int{0}); }

}  // namespace hammock
