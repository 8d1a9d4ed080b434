#include "braidlink/monodromy.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace braidlink {

int monodromy_exponent(const SingularityType& t) {
    switch (t.kind) {
        case SingularityKind::branch: return 1;
        case SingularityKind::node: return 2;
        case SingularityKind::node_at_infinity: return 2;
        case SingularityKind::cusp: return 3;
        case SingularityKind::tangency: return 4;
        case SingularityKind::multi_point: return 2;
    }
    throw std::logic_error("unreachable");
}

SingularityKind singularity_kind_from_string(const std::string& s) {
    if (s == "branch") return SingularityKind::branch;
    if (s == "node") return SingularityKind::node;
    if (s == "node_at_infinity") return SingularityKind::node_at_infinity;
    if (s == "cusp") return SingularityKind::cusp;
    if (s == "tangency") return SingularityKind::tangency;
    if (s == "multi_point") return SingularityKind::multi_point;
    throw std::invalid_argument("unknown singularity type: " + s);
}

std::string to_string(SingularityKind k) {
    switch (k) {
        case SingularityKind::branch: return "branch";
        case SingularityKind::node: return "node";
        case SingularityKind::node_at_infinity: return "node_at_infinity";
        case SingularityKind::cusp: return "cusp";
        case SingularityKind::tangency: return "tangency";
        case SingularityKind::multi_point: return "multi_point";
    }
    throw std::logic_error("unreachable");
}

int configuration_strands(const Configuration& c) {
    if (c.strands > 0) return c.strands;
    int n = 0;
    for (const auto& comp : c.components) n += comp.kind == "conic" ? 2 : 1;
    if (n < 1) throw std::invalid_argument("configuration has no components");
    return n;
}

Factorization factorization_of(const Configuration& c, bool include_infinity) {
    Factorization f;
    f.strands = configuration_strands(c);
    int idx = 0;
    for (const auto& s : c.singularities) {
        ++idx;
        if (s.type.kind == SingularityKind::node_at_infinity && !include_infinity) continue;
        std::string label =
            s.label.empty() ? to_string(s.type.kind) + "-" + std::to_string(idx) : s.label;
        f.factors.emplace_back(label, compile(s.expr, f.strands));
    }
    return f;
}

BraidWord table_product(const Factorization& f) {
    BraidWord out;
    out.strands = f.strands;
    for (const auto& [label, w] : f.factors) out = concat(out, w);
    return free_reduce(out);
}

Factorization generic_line_factorization(int m) {
    if (m < 2) throw std::invalid_argument("a generic arrangement needs at least two lines");
    Factorization f;
    f.strands = m;
    // reverse-lexicographic: the formula's double product read from the right
    for (int l = m; l >= 2; --l)
        for (int k = l - 1; k >= 1; --k)
            f.factors.emplace_back("node " + std::to_string(k) + "," + std::to_string(l),
                                   compile(z(k, l, 2), m));
    return f;
}

BraidWord full_twist(int m) {
    if (m < 2) throw std::invalid_argument("full twist needs at least two strands");
    BraidWord w;
    w.strands = m;
    for (int r = 0; r < m; ++r)
        for (int i = 1; i < m; ++i) w.letters.push_back(i);
    return w;
}

HalfTwistExpr regenerate_node(int i, int j, NodeRegenMode mode, int strands) {
    if (i < 1 || i >= j) throw std::invalid_argument("node regeneration needs 1 <= i < j");
    if (2 * j > strands) throw std::invalid_argument("doubled strands exceed strand count");
    switch (mode) {
        case NodeRegenMode::first:
            return twist({doubled_pair(i), single_endpoint(2 * j - 1)}, 2);
        case NodeRegenMode::second:
            return twist({single_endpoint(2 * i - 1), doubled_pair(j)}, 2);
        case NodeRegenMode::both:
            return twist({doubled_pair(i), doubled_pair(j)}, 2);
    }
    throw std::logic_error("unreachable");
}

std::vector<HalfTwistExpr> regenerate_tangency(int i, int j, TangencySide side, int strands) {
    if (i < 1 || i >= j) throw std::invalid_argument("tangency regeneration needs 1 <= i < j");
    if (2 * j > strands) throw std::invalid_argument("doubled strands exceed strand count");
    HalfTwistExpr base, conj;
    if (side == TangencySide::left) {
        base = z(2 * i, 2 * j - 1, 3);
        conj = z(2 * j - 1, 2 * j);
    } else {
        base = z(2 * i - 1, 2 * j - 1, 3);
        conj = z(2 * i - 1, 2 * i);
    }
    return {conjugated(base, conj), base, conjugated(base, inverted(conj))};
}

namespace {

BraidWord wd(int strands, const char* text) {
    std::istringstream in(text);
    std::vector<int> letters;
    int x;
    while (in >> x) letters.push_back(x);
    return braid(strands, std::move(letters));
}

Singularity sing(std::string label, SingularityKind kind, std::vector<std::string> incident,
                 HalfTwistExpr expr, int multiplicity = 2) {
    Singularity s;
    s.label = std::move(label);
    s.type = SingularityType{kind, multiplicity};
    s.incident = std::move(incident);
    s.expr = std::move(expr);
    return s;
}

Configuration two_point_config(TwoPointCase c) {
    Configuration cfg;
    cfg.name = c == TwoPointCase::A ? "2pt-A" : "2pt-B";
    if (c == TwoPointCase::A)
        cfg.components = {{"conic", "c"}, {"line", "L"}, {"line", "L'"}};
    else
        cfg.components = {{"line", "L"}, {"line", "L'"}, {"conic", "c"}};
    auto side = c == TwoPointCase::A ? TangencySide::left : TangencySide::right;
    auto cusps = regenerate_tangency(1, 2, side, 4);
    const char* cn[3] = {"cusp-1", "cusp-2", "cusp-3"};
    std::vector<std::string> inc = {"c", "L", "L'"};
    for (int k = 0; k < 3; ++k)
        cfg.singularities.push_back(sing(cn[k], SingularityKind::cusp, inc, cusps[k]));
    HalfTwistExpr branch =
        c == TwoPointCase::A
            ? conjugated(z(1, 2), twist({single_endpoint(2), Endpoint{3, 2}}, 2))
            : conjugated(z(3, 4), twist({Endpoint{1, 2}, single_endpoint(3)}, 2));
    cfg.singularities.push_back(sing("branch", SingularityKind::branch, {"c"}, branch));
    return cfg;
}

struct ItemizedFactor {
    const char* label;
    SingularityKind kind;
    const char* word;
};

Configuration itemized_config(const std::string& name, std::vector<CurveComponent> components,
                              const std::vector<ItemizedFactor>& items, int strands) {
    Configuration cfg;
    cfg.name = name;
    cfg.components = std::move(components);
    cfg.strands = strands;
    for (const auto& it : items)
        cfg.singularities.push_back(sing(it.label, it.kind, {}, letters(wd(strands, it.word))));
    return cfg;
}

Configuration three_point_type1_config(ThreePointCase c) {
    std::vector<CurveComponent> comps = {
        {"line", "a"}, {"line", "a'"}, {"line", "b"}, {"line", "b'"}, {"conic", "c"}};
    const SingularityKind cu = SingularityKind::cusp;
    const SingularityKind no = SingularityKind::node;
    const SingularityKind br = SingularityKind::branch;
    switch (c) {
        case ThreePointCase::A:
            return itemized_config(
                "3pt1-A", comps,
                {{"cusp-1", cu, "4 4 4"},
                 {"cusp-2", cu, "-4 3 3 3 4"},
                 {"cusp-3", cu, "3 3 4 4 4 -3 -3"},
                 {"node-1", no, "-4 -4 -3 2 2 3 4 4"},
                 {"node-2", no, "3 -4 -4 -3 2 2 3 4 4 -3"},
                 {"node-3", no, "-4 -4 -3 -2 1 1 2 3 4 4"},
                 {"node-4", no, "3 -4 -4 -3 -2 1 1 2 3 4 4 -3"},
                 {"cusp-4", cu, "-4 -3 2 2 2 3 4"},
                 {"cusp-5", cu, "-4 -3 -2 1 1 1 2 3 4"},
                 {"cusp-6", cu, "1 1 -4 -3 2 2 2 3 4 -1 -1"},
                 {"branch", br, "-4 -3 -2 -1 -1 -2 -3 -4 5 4 3 2 1 1 2 3 4"}},
                6);
        case ThreePointCase::B:
            return itemized_config(
                "3pt1-B", comps,
                {{"cusp-1", cu, "2 2 2"},
                 {"cusp-2", cu, "-2 1 1 1 2"},
                 {"cusp-3", cu, "1 1 2 2 2 -1 -1"},
                 {"cusp-4", cu, "-5 4 4 4 5"},
                 {"cusp-5", cu, "4 4 4"},
                 {"cusp-6", cu, "5 4 4 4 -5"},
                 {"branch", br, "-4 -5 -5 -4 -2 -1 -1 -2 3 2 1 1 2 4 5 5 4"},
                 {"node-1", no, "-5 -4 3 2 2 -3 4 5"},
                 {"node-2", no, "-4 3 2 2 -3 4"},
                 {"node-3", no, "-5 -4 3 -2 1 1 2 -3 4 5"},
                 {"node-4", no, "-4 3 -2 1 1 2 -3 4"}},
                6);
        case ThreePointCase::C:
            return itemized_config(
                "3pt1-C", comps,
                {{"cusp-1", cu, "-3 2 2 2 3"},
                 {"cusp-2", cu, "2 2 2"},
                 {"cusp-3", cu, "3 2 2 2 -3"},
                 {"node-1", no, "-5 3 -2 -2 -3 4 4 3 2 2 -3 5"},
                 {"node-2", no, "3 -2 -2 -3 4 4 3 2 2 -3"},
                 {"node-3", no, "-5 3 3 -2 -2 -3 4 4 3 2 2 -3 -3 5"},
                 {"node-4", no, "3 3 -2 -2 -3 4 4 3 2 2 -3 -3"},
                 {"cusp-4", cu, "-5 4 3 2 2 2 -3 -4 5"},
                 {"cusp-5", cu, "4 3 2 2 2 -3 -4"},
                 {"cusp-6", cu, "5 4 3 2 2 2 -3 -4 -5"},
                 {"branch", br, "-2 -3 -4 -5 -5 -4 -3 -2 1 2 3 4 5 5 4 3 2"}},
                6);
    }
    throw std::logic_error("unreachable");
}

Configuration three_point_type2_config() {
    const SingularityKind cu = SingularityKind::cusp;
    const SingularityKind no = SingularityKind::node;
    const SingularityKind br = SingularityKind::branch;
    return itemized_config(
        "3pt-type2",
        {{"conic", "c1"}, {"line", "L"}, {"line", "L'"}, {"conic", "c2"}},
        {{"cusp-1", cu, "4 4 4"},
         {"cusp-2", cu, "-4 3 3 3 4"},
         {"cusp-3", cu, "3 3 4 4 4 -3 -3"},
         {"branch-1", br, "-4 -3 -3 -4 5 4 3 3 4"},
         {"node-1", no, "-5 -4 -3 2 2 3 4 5"},
         {"node-2", no, "-5 -4 -3 -2 1 1 2 3 4 5"},
         {"node-3", no, "-4 -3 -3 -4 -4 -3 2 2 3 4 4 3 3 4"},
         {"node-4", no, "-4 -3 -3 -4 -4 -3 -2 1 1 2 3 4 4 3 3 4"},
         {"cusp-4", cu, "-3 2 2 2 3"},
         {"cusp-5", cu, "2 2 2"},
         {"cusp-6", cu, "3 2 2 2 -3"},
         {"branch-2", br, "-2 -3 -3 -2 1 2 3 3 2"}},
        6);
}

std::map<std::string, BuiltinExample> make_builtins() {
    std::map<std::string, BuiltinExample> out;

    {
        Configuration cfg;
        cfg.name = "triangle";
        cfg.components = {{"line", "1"}, {"line", "2"}, {"line", "3"}};
        cfg.singularities = {
            sing("node-1", SingularityKind::node, {"1", "2"}, z(1, 2, 2)),
            sing("node-2", SingularityKind::node, {"1", "3"}, zbar(1, 3, 2)),
            sing("node-3", SingularityKind::node, {"2", "3"}, z(2, 3, 2)),
        };
        out["triangle"] = {cfg, wd(3, "1 2 2 1 2 2")};
    }
    {
        // four lines: a triple point, and a parallel pair whose intersection
        // at infinity is kept out of the local product
        Configuration cfg;
        cfg.name = "four-lines";
        cfg.components = {{"line", "1"}, {"line", "2"}, {"line", "3"}, {"line", "4"}};
        cfg.singularities = {
            sing("node-1", SingularityKind::node, {"2", "3"}, z(2, 3, 2)),
            sing("node-2", SingularityKind::node, {"2", "4"}, zbar(2, 4, 2)),
            sing("triple", SingularityKind::multi_point, {"1", "3", "4"},
                 twist({single_endpoint(1), single_endpoint(3), single_endpoint(4)}, 2), 3),
            sing("infinity", SingularityKind::node_at_infinity, {"1", "2"}, z(1, 2, 2)),
        };
        out["four-lines"] = {cfg, wd(4, "2 3 1 2 1 2 3 1 2 3")};
    }
    {
        Configuration cfg;
        cfg.name = "conic-line-A";
        cfg.components = {{"conic", "c"}, {"line", "L"}};
        cfg.singularities = {
            sing("tangency", SingularityKind::tangency, {"c", "L"}, z(2, 3, 4)),
            sing("branch", SingularityKind::branch, {"c"}, conjugated(z(1, 2), z(2, 3, 2))),
        };
        out["conic-line-A"] = {cfg, wd(3, "2 2 1 2 2")};
    }
    {
        Configuration cfg;
        cfg.name = "conic-line-B";
        cfg.components = {{"conic", "c"}, {"line", "L"}};
        cfg.singularities = {
            sing("node-1", SingularityKind::node, {"c", "L"}, z(2, 3, 2)),
            sing("node-2", SingularityKind::node, {"c", "L"}, z(1, 3, 2)),
            sing("branch", SingularityKind::branch, {"c"}, z(1, 2)),
        };
        out["conic-line-B"] = {cfg, wd(3, "2 2 1 2 2")};
    }
    {
        Configuration cfg;
        cfg.name = "two-conics-A";
        cfg.components = {{"conic", "c1"}, {"conic", "c2"}};
        cfg.singularities = {
            sing("tangency", SingularityKind::tangency, {"c1", "c2"}, z(2, 3, 4)),
            sing("branch-1", SingularityKind::branch, {"c2"}, conjugated(z(3, 4), z(2, 3, 2))),
            sing("branch-2", SingularityKind::branch, {"c1"}, conjugated(z(1, 2), z(2, 3, 2))),
        };
        out["two-conics-A"] = {cfg, wd(4, "2 2 3 1 2 2")};
    }
    {
        Configuration cfg;
        cfg.name = "two-conics-B";
        cfg.components = {{"conic", "c1"}, {"conic", "c2"}};
        cfg.singularities = {
            sing("node-1", SingularityKind::node, {"c1", "c2"}, z(2, 3, 2)),
            sing("node-2", SingularityKind::node, {"c1", "c2"}, zbar(2, 4, 2)),
            sing("node-3", SingularityKind::node, {"c1", "c2"}, z(1, 3, 2)),
            sing("node-4", SingularityKind::node, {"c1", "c2"},
                 conjugated(z(1, 4, 2), z(3, 4, -2))),
            sing("branch-1", SingularityKind::branch, {"c2"}, z(3, 4)),
            sing("branch-2", SingularityKind::branch, {"c1"}, z(1, 2)),
        };
        out["two-conics-B"] = {cfg, wd(4, "2 3 3 1 1 2 3 1 2 2")};
    }
    out["2pt-A"] = {two_point_config(TwoPointCase::A), wd(4, "2 3 3 2 1 3 2 3 3 2")};
    out["2pt-B"] = {two_point_config(TwoPointCase::B), wd(4, "2 1 1 2 1 3 2 1 1 2")};
    out["3pt1-A"] = {three_point_type1_config(ThreePointCase::A),
                     wd(6, "4 3 3 4 2 3 1 2 4 3 3 2 4 3 2 1 2 3 5 4 3 2 1 1 2 3 4")};
    out["3pt1-B"] = {three_point_type1_config(ThreePointCase::B),
                     wd(6, "4 3 2 1 5 4 3 2 1 2 3 4 5 1 2 3 4 3 2 1 3 2 3 2 1 3 2")};
    out["3pt1-C"] = {three_point_type1_config(ThreePointCase::C), std::nullopt};
    out["3pt-type2"] = {three_point_type2_config(),
                        wd(6, "1 2 5 4 3 5 2 3 1 2 2 3 4 5 5 4 4 5 3 4 4 3 4 2 3 4 4 3")};
    return out;
}

const std::map<std::string, BuiltinExample>& builtins() {
    static const std::map<std::string, BuiltinExample> table = make_builtins();
    return table;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : builtins()) v.push_back(k);
        return v;
    }();
    return names;
}

const BuiltinExample& builtin(const std::string& name) {
    auto it = builtins().find(name);
    if (it == builtins().end()) throw std::invalid_argument("unknown built-in example: " + name);
    return it->second;
}

Factorization two_point_factorization(TwoPointCase c) {
    return factorization_of(builtin(c == TwoPointCase::A ? "2pt-A" : "2pt-B").config);
}

BraidWord two_point_product(TwoPointCase c) {
    return *builtin(c == TwoPointCase::A ? "2pt-A" : "2pt-B").stated_product;
}

namespace {
std::string type1_name(ThreePointCase c) {
    switch (c) {
        case ThreePointCase::A: return "3pt1-A";
        case ThreePointCase::B: return "3pt1-B";
        case ThreePointCase::C: return "3pt1-C";
    }
    throw std::logic_error("unreachable");
}
}  // namespace

Factorization three_point_type1_factorization(ThreePointCase c) {
    return factorization_of(builtin(type1_name(c)).config);
}

std::optional<BraidWord> three_point_type1_product(ThreePointCase c) {
    return builtin(type1_name(c)).stated_product;
}

Factorization three_point_type2_factorization() {
    return factorization_of(builtin("3pt-type2").config);
}

BraidWord three_point_type2_product() { return *builtin("3pt-type2").stated_product; }

std::vector<int> lex_order_vertices(const DegenerationDiagram& d) {
    std::vector<int> order(d.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto key = [&](int v) { return std::make_pair(d.vertices[v].second, d.vertices[v].first); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    for (size_t i = 1; i < order.size(); ++i)
        if (key(order[i - 1]) == key(order[i]))
            throw std::invalid_argument("duplicate vertex in diagram");
    return order;
}

std::vector<int> lex_order_lines(const DegenerationDiagram& d,
                                 const std::vector<int>& vertex_order) {
    std::vector<int> rank(d.vertices.size(), 0);
    for (size_t i = 0; i < vertex_order.size(); ++i) rank[vertex_order[i]] = static_cast<int>(i);
    auto key = [&](int e) {
        int u = rank[d.edges[e].a], v = rank[d.edges[e].b];
        if (u > v) std::swap(u, v);
        return std::make_pair(v, u);
    };
    std::vector<int> order(d.edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    return order;
}

namespace {

std::vector<std::vector<int>> incident_edges(const DegenerationDiagram& d) {
    std::vector<std::vector<int>> inc(d.vertices.size());
    for (size_t e = 0; e < d.edges.size(); ++e) {
        const auto& edge = d.edges[e];
        if (edge.a < 0 || edge.b < 0 || edge.a >= static_cast<int>(d.vertices.size()) ||
            edge.b >= static_cast<int>(d.vertices.size()))
            throw std::invalid_argument("edge endpoint is not a listed vertex");
        inc[edge.a].push_back(static_cast<int>(e));
        inc[edge.b].push_back(static_cast<int>(e));
    }
    return inc;
}

int diagonal_count(const DegenerationDiagram& d, const std::vector<int>& edges) {
    int c = 0;
    for (int e : edges)
        if (d.edges[e].kind == EdgeKind::diagonal) ++c;
    return c;
}

}  // namespace

std::vector<KPoint> classify_k_points(const DegenerationDiagram& d) {
    auto inc = incident_edges(d);
    std::vector<KPoint> out;
    for (size_t v = 0; v < d.vertices.size(); ++v) {
        int k = static_cast<int>(inc[v].size());
        if (k == 0) continue;
        KPoint p;
        p.vertex = static_cast<int>(v);
        p.count = k;
        if (k == 1) {
            p.type = KPointType::one_point;
        } else if (k == 2) {
            p.type = KPointType::two_point;
        } else if (k == 3) {
            int diag = diagonal_count(d, inc[v]);
            if (diag == 0 || diag == 3)
                throw std::invalid_argument(
                    "a 3-point must have exactly one or two diagonal lines");
            p.type = diag == 1 ? KPointType::three_point_type1 : KPointType::three_point_type2;
        } else {
            p.type = KPointType::higher;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<DiagramRegeneration> regenerate_diagram(const DegenerationDiagram& d) {
    auto points = classify_k_points(d);
    for (const auto& p : points)
        if (p.type == KPointType::higher)
            throw unsupported_feature("regeneration of a " + std::to_string(p.count) +
                                      "-point is not supported (only 2- and 3-points)");
    auto vorder = lex_order_vertices(d);
    auto lorder = lex_order_lines(d, vorder);
    std::vector<int> vrank(d.vertices.size(), 0), erank(d.edges.size(), 0);
    for (size_t i = 0; i < vorder.size(); ++i) vrank[vorder[i]] = static_cast<int>(i);
    for (size_t i = 0; i < lorder.size(); ++i) erank[lorder[i]] = static_cast<int>(i);
    auto inc = incident_edges(d);

    std::vector<const KPoint*> by_rank;
    for (const auto& p : points)
        if (p.count >= 2) by_rank.push_back(&p);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](const KPoint* a, const KPoint* b) { return vrank[a->vertex] < vrank[b->vertex]; });

    std::vector<DiagramRegeneration> out;
    for (const KPoint* p : by_rank) {
        std::vector<int> edges = inc[p->vertex];
        std::sort(edges.begin(), edges.end(), [&](int a, int b) { return erank[a] < erank[b]; });
        DiagramRegeneration r;
        r.point = *p;
        if (p->type == KPointType::two_point) {
            int diag = diagonal_count(d, edges);
            if (diag == 0) {
                // both lines double; the node becomes four nodes
                r.variant = "nodes";
                Factorization f;
                f.strands = 4;
                auto expanded = pair_expand(regenerate_node(1, 2, NodeRegenMode::both, 4));
                int k = 0;
                for (const auto& child : expanded.children)
                    f.factors.emplace_back("node-" + std::to_string(++k), compile(child, 4));
                r.local = std::move(f);
            } else if (diag == 1) {
                bool diag_first = d.edges[edges[0]].kind == EdgeKind::diagonal;
                r.variant = diag_first ? "A" : "B";
                r.local = two_point_factorization(diag_first ? TwoPointCase::A : TwoPointCase::B);
            } else {
                throw unsupported_feature("2-point with two diagonal lines is not supported");
            }
        } else if (p->type == KPointType::three_point_type1) {
            int pos = 0;
            for (int k = 0; k < 3; ++k)
                if (d.edges[edges[k]].kind == EdgeKind::diagonal) pos = k;
            ThreePointCase c = pos == 2   ? ThreePointCase::A
                               : pos == 1 ? ThreePointCase::B
                                          : ThreePointCase::C;
            r.variant = pos == 2 ? "A" : pos == 1 ? "B" : "C";
            r.local = three_point_type1_factorization(c);
        } else {
            r.variant = "";
            r.local = three_point_type2_factorization();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace braidlink
