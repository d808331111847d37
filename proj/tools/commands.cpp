#include "commands.hpp"

#include <algorithm>
#include <optional>
#include <ranges>
#include <sstream>

#include <json.hpp>

#include "hammock/checks.hpp"
#include "hammock/cluster.hpp"
#include "hammock/complexes.hpp"
#include "hammock/exceptional.hpp"
#include "hammock/sweep.hpp"
#include "hammock/yring.hpp"
#include "hammock/zq.hpp"

namespace hammock::cli {

using json = nlohmann::ordered_json;

namespace {

void emit(std::ostream &out, const json &j) { out << j.dump(2) << "\n"; }

void need_format(const RunConfig &cfg, std::initializer_list<const char *> allowed) {
    for (auto *f : allowed)
        if (cfg.format == f) return;
    throw UsageError("format '" + cfg.format + "' is not available for this command");
}

Quiver load(const RunConfig &cfg) {
    if (cfg.quiver.empty()) throw UsageError("--quiver is required");
    return load_quiver_file(cfg.quiver);
}

int vertex_of(const Quiver &q, const std::string &name) {
    if (auto v = q.find(name)) return *v;
    throw UsageError("unknown vertex '" + name + "'");
}

// "V" is (V, 0); "V@m" picks another layer
ZQVertex zq_vertex(const Quiver &q, const std::string &spec) {
    if (spec.empty()) throw UsageError("--vertex is required");
    if (auto v = q.find(spec)) return {*v, 0};
    auto at = spec.rfind('@');
    if (at == std::string::npos) throw UsageError("unknown vertex '" + spec + "'");
    int v = vertex_of(q, spec.substr(0, at));
    try {
        size_t used = 0;
        Int m = std::stoll(spec.substr(at + 1), &used);
        if (used != spec.size() - at - 1) throw std::invalid_argument("trailing characters");
        return {v, m};
    } catch (const std::logic_error &) {
        throw UsageError("bad layer in vertex designator '" + spec + "'");
    }
}

PiVariant variant_of(const RunConfig &cfg) { return cfg.variant == "target" ? PiVariant::Target : PiVariant::Source; }

std::vector<std::string> labels(const Quiver &q, const std::vector<DimVec> &vs) {
    std::vector<std::string> r;
    for (auto &v : vs) r.push_back(entry_label(q, v));
    return r;
}

std::string joined(const std::vector<std::string> &xs, const std::string &sep) {
    std::string s;
    for (auto &x : xs) s += (s.empty() ? "" : sep) + x;
    return s;
}

std::vector<std::string> vertex_names(const Quiver &q, const Multiset<int> &vs) {
    std::vector<std::string> r;
    for (int v : vs.elements()) r.push_back(q.name(v));
    return r;
}

// the out-arrow of v in Q-bar with the largest t
int max_t_out_arrow(const ExcFamily &f, int v) {
    int best = -1;
    for (int a : f.qbar.out(v))
        if (best < 0 || f.t[a] > f.t[best]) best = a;
    if (best < 0) throw std::logic_error("vertex without out-arrow in Q-bar");
    return best;
}

StandardSpec resolve_spec(const RunConfig &cfg, const ExcFamily &f) {
    if (cfg.arrows_given && !cfg.vertex.empty()) throw UsageError("give either --arrows or --vertex");
    if (cfg.arrows_given) return parse_spec(f.qbar, cfg.arrows);
    if (!cfg.vertex.empty()) {
        StandardSpec s;
        s.arrows.add(max_t_out_arrow(f, vertex_of(f.q, cfg.vertex)));
        return s;
    }
    throw UsageError("one of --arrows, --vertex or --beta is required");
}

json poly_json(const Quiver &q, const LaurentPoly &p) { return p.str(&q); }

}  // namespace

int cmd_hammock(const RunConfig &cfg, std::ostream &out) {
    need_format(cfg, {"json", "tsv"});
    Quiver q = load(cfg);
    ZQVertex x = zq_vertex(q, cfg.vertex);
    const bool dyn = is_dynkin(q);
    if (cfg.hset && !dyn) {
        throw QuiverError(QuiverError::Kind::NotDynkin,
                          "H(x) needs a Dynkin quiver; " + quiver_string(q) + " is not");
    }
    const Int width = cfg.window > 0 ? cfg.window : q.size() + 2;
    ZQ zq(q);
    std::vector<Int> cols;
    for (Int m = x.m - 1; m <= x.m + width; ++m) cols.push_back(m);

    std::optional<Multiset<ZQVertex>> H;
    std::optional<StripTable> st;
    if (dyn) {
        st.emplace(q);
        H = st->hammock_multiset(x);
    }

    if (cfg.format == "tsv") {
        out << "vertex";
        for (Int m : cols) out << "\tm=" << m;
        out << "\n";
        for (int v = 0; v < q.size(); ++v) {
            out << q.name(v);
            for (Int m : cols) out << "\t" << zq.h(x, {v, m});
            out << "\n";
        }
        if (H) {
            out << "\nobject\tvertex\tmultiplicity\n";
            for (auto &[z, c] : H->counts()) out << st->label_string(z) << "\t" << zq_string(q, z) << "\t" << c << "\n";
        }
        return kOk;
    }
    json j;
    j["quiver"] = quiver_string(q);
    j["x"] = zq_string(q, x);
    j["columns"] = cols;
    json rows = json::array();
    for (int v = 0; v < q.size(); ++v) {
        std::vector<Int> vals;
        for (Int m : cols) vals.push_back(zq.h(x, {v, m}));
        rows.push_back({{"vertex", q.name(v)}, {"values", vals}});
    }
    j["grid"] = rows;
    if (H) {
        json hs = json::array();
        for (auto &[z, c] : H->counts())
            hs.push_back({{"object", st->label_string(z)}, {"vertex", zq_string(q, z)}, {"multiplicity", c}});
        j["H"] = hs;
        j["H_size"] = H->size();
    }
    emit(out, j);
    return kOk;
}

int cmd_exseq(const RunConfig &cfg, std::ostream &out) {
    need_format(cfg, {"json", "tsv"});
    Quiver q = load(cfg);
    ExcFamily f = build_family(q);
    if (cfg.format == "tsv") {
        out << "vertex";
        for (int t = 0; t <= f.m(); ++t) out << "\tt=" << t;
        out << "\n";
        for (int v = 0; v < q.size(); ++v) {
            out << q.name(v);
            for (int t = 0; t <= f.m(); ++t) out << "\t" << entry_label(q, f.x(v, t));
            out << "\n";
        }
        out << "\narrow\tt\n";
        for (int a = 0; a < f.qbar.size(); ++a) out << f.qbar.arrow_name(a) << "\t" << f.t[a] << "\n";
        return kOk;
    }
    json j;
    j["quiver"] = quiver_string(q);
    j["m"] = f.m();
    json rows = json::array();
    for (int v = 0; v < q.size(); ++v) {
        std::vector<DimVec> row;
        for (int t = 0; t <= f.m(); ++t) row.push_back(f.x(v, t));
        json dims = json::array();
        for (auto &d : row) dims.push_back(dim_string(d));
        rows.push_back({{"vertex", q.name(v)}, {"entries", labels(q, row)}, {"dims", dims}});
    }
    j["rows"] = rows;
    json ts = json::array();
    for (int a = 0; a < f.qbar.size(); ++a) ts.push_back({{"arrow", f.qbar.arrow_name(a)}, {"t", f.t[a]}});
    j["t"] = ts;
    emit(out, j);
    return kOk;
}

int cmd_pibar(const RunConfig &cfg, std::ostream &out) {
    need_format(cfg, {"json", "tsv"});
    Quiver q = load(cfg);
    ExcFamily f = build_family(q);
    std::vector<int> arrows;
    if (cfg.arrows_given) {
        const StandardSpec spec = parse_spec(f.qbar, cfg.arrows);
        for (int a : spec.arrows.counts() | std::views::keys) arrows.push_back(a);
    } else {
        for (int a = 0; a < f.qbar.size(); ++a) arrows.push_back(a);
    }
    const PiVariant var = variant_of(cfg);
    if (cfg.format == "tsv") {
        out << "# variant " << cfg.variant << "\narrow\tt\tpibar\n";
        for (int a : arrows)
            out << f.qbar.arrow_name(a) << "\t" << f.t[a] << "\t" << joined(labels(q, pibar_list(f, a, var)), " ") << "\n";
        return kOk;
    }
    json j;
    j["quiver"] = quiver_string(q);
    j["variant"] = cfg.variant;
    json rows = json::array();
    for (int a : arrows)
        rows.push_back({{"arrow", f.qbar.arrow_name(a)}, {"t", f.t[a]}, {"pibar", labels(q, pibar_list(f, a, var))}});
    j["arrows"] = rows;
    emit(out, j);
    return kOk;
}

namespace {

int simple_character(const RunConfig &cfg, const Quiver &q, std::ostream &out) {
    need_format(cfg, {"json", "tsv"});
    const HeightFunction xi = effective_height(q);
    const DimVec beta = parse_dim(q, cfg.beta);
    const WeightedFn h = canonical_cd_for(q, beta);
    const LaurentPoly chi = simple_complex_char(q, xi, h);
    const LaurentPoly spec = specialize_F(chi, cfg.fspec);
    const LaurentPoly yhat = a_to_yhat(spec);
    if (cfg.format == "tsv") {
        out << "beta\t" << dim_string(beta) << "\nh\t" << weighted_string(h) << "\neuler\t" << chi.str(&q)
            << "\nspecialized\t" << spec.str(&q) << "\nyhat\t" << yhat.str(&q) << "\n";
        return kOk;
    }
    json j;
    j["quiver"] = quiver_string(q);
    j["vertices"] = q.names();
    j["beta"] = dim_string(beta);
    j["h"] = weighted_string(h);
    j["fspec"] = cfg.fspec;
    j["euler"] = poly_json(q, chi);
    j["specialized"] = poly_json(q, spec);
    j["yhat"] = poly_json(q, yhat);
    emit(out, j);
    return kOk;
}

}  // namespace

int cmd_complex(const RunConfig &cfg, std::ostream &out) {
    Quiver q = load(cfg);
    if (!cfg.beta.empty()) {
        if (cfg.arrows_given || !cfg.vertex.empty()) throw UsageError("--beta excludes --arrows and --vertex");
        return simple_character(cfg, q, out);
    }
    need_format(cfg, {"json", "tsv", "dot"});
    const HeightFunction xi = effective_height(q);
    ExcFamily f = build_family(q);
    const StandardSpec spec = resolve_spec(cfg, f);
    const ComplexSkeleton sk = standard_complex(f, spec, variant_of(cfg));
    if (cfg.format == "dot") {
        out << render_dot(q, xi, sk);
        return kOk;
    }
    const LaurentPoly chi = euler_char(xi, sk);
    const LaurentPoly expanded = expand_a(q, chi);
    const LaurentPoly spec_chi = expand_a(q, specialize_F(chi, cfg.fspec));
    if (cfg.format == "tsv") {
        out << "degree\ttensor\ttilts\tclass\n";
        for (auto &[deg, objs] : sk.degrees)
            for (auto &o : objs)
                out << deg << "\t" << joined(labels(q, o.tensor), " (x) ") << "\t" << joined(vertex_names(q, o.tilts), " ")
                    << "\t" << expand_a(q, object_class(xi, sk, o)).str(&q) << "\n";
        out << "\neuler\t" << expanded.str(&q) << "\nspecialized\t" << spec_chi.str(&q) << "\n";
        return kOk;
    }
    json j;
    j["quiver"] = quiver_string(q);
    j["spec"] = spec_string(f.qbar, spec);
    j["variant"] = cfg.variant;
    j["base"] = labels(q, sk.base);
    j["length"] = sk.max_degree();
    json degs = json::array();
    for (auto &[deg, objs] : sk.degrees) {
        json os = json::array();
        for (auto &o : objs)
            os.push_back({{"tensor", labels(q, o.tensor)},
                          {"tilts", vertex_names(q, o.tilts)},
                          {"class", expand_a(q, object_class(xi, sk, o)).str(&q)}});
        degs.push_back({{"degree", deg}, {"objects", os}});
    }
    j["degrees"] = degs;
    j["euler"] = poly_json(q, expanded);
    j["fspec"] = cfg.fspec;
    j["specialized"] = poly_json(q, spec_chi);
    emit(out, j);
    return kOk;
}

int cmd_render(const RunConfig &cfg, std::ostream &out) {
    need_format(cfg, {"json", "dot"});
    RunConfig c = cfg;
    c.format = "dot";
    if (!c.beta.empty()) throw UsageError("render draws standard complexes; use --arrows or --vertex");
    return cmd_complex(c, out);
}

int cmd_qchar(const RunConfig &cfg, std::ostream &out) {
    need_format(cfg, {"json", "tsv"});
    Quiver q = load(cfg);
    const HeightFunction xi = effective_height(q);
    if (cfg.arrows_given) {
        ExtendedQuiver qbar(q);
        StandardSpec spec = parse_spec(qbar, cfg.arrows);
        auto vs = spec_vertices(qbar, spec);
        LaurentPoly trunc = standard_trunc_renormalized(q, xi, vs);
        LaurentPoly full = standard_trunc(q, xi, vs);
        if (cfg.format == "tsv") {
            out << "spec\t" << spec_string(qbar, spec) << "\nrenormalized\t" << trunc.str(&q) << "\ncharacter\t"
                << full.str(&q) << "\n";
            return kOk;
        }
        json j;
        j["quiver"] = quiver_string(q);
        j["spec"] = spec_string(qbar, spec);
        j["renormalized"] = poly_json(q, trunc);
        j["character"] = poly_json(q, full);
        emit(out, j);
        return kOk;
    }
    std::vector<int> vs;
    if (!cfg.vertex.empty())
        vs.push_back(vertex_of(q, cfg.vertex));
    else
        for (int v = 0; v < q.size(); ++v) vs.push_back(v);
    if (cfg.format == "tsv") out << "vertex\tphi\tcharacter\n";
    json rows = json::array();
    for (int v : vs) {
        LaurentPoly phi = fundamental_trunc(q, xi, v);
        LaurentPoly ch = fundamental_character(q, xi, v);
        if (cfg.format == "tsv")
            out << q.name(v) << "\t" << phi.str(&q) << "\t" << ch.str(&q) << "\n";
        else
            rows.push_back({{"vertex", q.name(v)}, {"phi", poly_json(q, phi)}, {"character", poly_json(q, ch)}});
    }
    if (cfg.format == "json") emit(out, {{"quiver", quiver_string(q)}, {"fundamental", rows}});
    return kOk;
}

int cmd_fpoly(const RunConfig &cfg, std::ostream &out) {
    need_format(cfg, {"json", "tsv"});
    Quiver q = load(cfg);
    std::optional<FiniteTypeTable> table;
    if (is_dynkin(q)) table = enumerate_finite_type(q);

    std::vector<DimVec> betas;
    if (!cfg.beta.empty())
        betas.push_back(parse_dim(q, cfg.beta));
    else if (table)
        for (auto &[d, cv] : table->by_denominator) betas.push_back(d);
    else
        throw UsageError("--beta is required for a non-Dynkin quiver");

    json rows = json::array();
    if (cfg.format == "tsv") out << "beta\trecursion\toracle\tg\n";
    for (auto &beta : betas) {
        std::optional<LaurentPoly> rec;
        std::string rec_note;
        try {
            rec = fpoly_recursion(q, beta);
        } catch (const std::exception &e) {
            rec_note = e.what();
        }
        const ClusterVariable *cv = nullptr;
        if (table) {
            auto it = table->by_denominator.find(beta);
            if (it != table->by_denominator.end()) cv = &it->second;
        }
        if (!rec && !cv) throw UsageError("no F-polynomial for " + dim_string(beta) + ": " + rec_note);
        if (cfg.format == "tsv") {
            out << dim_string(beta) << "\t" << (rec ? rec->str(&q) : "-") << "\t" << (cv ? cv->F.str(&q) : "-") << "\t"
                << (cv ? dim_string(cv->g) : "-") << "\n";
            continue;
        }
        json r;
        r["beta"] = dim_string(beta);
        r["recursion"] = rec ? json(rec->str(&q)) : json(nullptr);
        if (!rec) r["recursion_note"] = rec_note;
        r["oracle"] = cv ? json(cv->F.str(&q)) : json(nullptr);
        if (cv) r["g"] = cv->g;
        if (rec && cv) r["match"] = *rec == cv->F;
        rows.push_back(r);
    }
    if (cfg.format == "json") {
        json j;
        j["quiver"] = quiver_string(q);
        j["vertices"] = q.names();
        if (table) j["cluster_variables"] = table->variables.size();
        j["fpolys"] = rows;
        emit(out, j);
    }
    return kOk;
}

int cmd_check(const RunConfig &cfg, std::ostream &out) {
    CheckOptions opt;
    opt.inject_fault = cfg.inject_fault;
    opt.seed = cfg.seed;
    std::vector<CheckLine> lines;
    if (!cfg.quiver.empty()) {
        if (!cfg.sweep.empty()) throw UsageError("give either --quiver or --sweep");
        lines = check_quiver(load(cfg), static_cast<unsigned>(Suite::All), opt);
    } else {
        std::vector<SweepItem> items;
        try {
            items = parse_sweep(cfg.sweep.empty() ? default_sweep() : cfg.sweep);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        lines = run_sweep(items, opt);
    }
    size_t failed = 0;
    for (auto &l : lines) {
        json j;
        j["suite"] = l.suite;
        j["quiver"] = l.quiver;
        j["ok"] = l.ok;
        if (!l.ok) {
            j["counterexample"] = l.detail;
            ++failed;
        }
        out << j.dump() << "\n";
    }
    json s;
    s["summary"] = {{"checks", lines.size()}, {"failed", failed}};
    out << s.dump() << "\n";
    return failed ? kFailed : kOk;
}

}  // namespace hammock::cli
