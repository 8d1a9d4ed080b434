#include "braidlink/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace braidlink {

BraidWord parse_braid_word(const std::string& text, int strands) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> letters;
    std::optional<int> header;
    bool first = true;
    while (in >> tok) {
        if (first && tok.rfind("n=", 0) == 0) {
            header = std::stoi(tok.substr(2));
            first = false;
            continue;
        }
        first = false;
        if (tok.empty() || tok[0] != 's')
            throw parse_error("expected token s<k> or s<k>^-1, got '" + tok + "'", 0);
        size_t caret = tok.find('^');
        int index = 0, exp = 1;
        try {
            index = std::stoi(tok.substr(1, caret == std::string::npos ? caret : caret - 1));
            if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw parse_error("bad braid token '" + tok + "'", 0);
        }
        if (index < 1) throw parse_error("generator index must be positive in '" + tok + "'", 0);
        for (int r = 0; r < std::abs(exp); ++r) letters.push_back(exp >= 0 ? index : -index);
    }
    int n = strands;
    if (header) {
        if (n > 0 && *header != n)
            throw parse_error("word header n=" + std::to_string(*header) +
                                  " disagrees with requested strand count " + std::to_string(n),
                              0);
        n = *header;
    }
    if (n < 1) throw parse_error("strand count missing (pass -n or a n= header)", 0);
    return braid(n, std::move(letters));
}

namespace {

// One index in the expression grammar; primes are resolved once the whole
// expression is known to use component labels.
struct RawIndex {
    int value = 0;
    bool primed = false;
};

struct RawEndpoint {
    std::vector<RawIndex> indices;  // 1 = single, 2 = doubled pair
    bool range = false;             // a..b, stored as two indices
};

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    HalfTwistExpr run() {
        HalfTwistExpr e = parse_product(true);
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        resolve(e);
        return e;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    bool doubled_ = false;  // any prime or pair seen anywhere

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    int parse_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || (pos_ - start == 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            fail("expected an integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    RawIndex parse_index() {
        RawIndex r;
        r.value = parse_int();
        if (pos_ < text_.size() && text_[pos_] == '\'') {
            r.primed = true;
            doubled_ = true;
            ++pos_;
        }
        return r;
    }

    RawEndpoint parse_endpoint() {
        RawEndpoint ep;
        ep.indices.push_back(parse_index());
        skip_ws();
        if (pos_ + 1 < text_.size() && text_[pos_] == '.' && text_[pos_ + 1] == '.') {
            pos_ += 2;
            ep.range = true;
            ep.indices.push_back(parse_index());
            return ep;
        }
        // a second index before , or ] makes a doubled pair
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            ep.indices.push_back(parse_index());
            doubled_ = true;
        }
        return ep;
    }

    HalfTwistExpr parse_twist(bool bar) {
        if (!eat('[')) fail("expected '[' after Z");
        std::vector<RawEndpoint> eps;
        for (;;) {
            eps.push_back(parse_endpoint());
            if (eat(']')) break;
            if (!eat(',')) fail("expected ',' or ']' in Z[...]");
        }
        // raw endpoints ride along in the children until resolution
        HalfTwistExpr e;
        e.kind = HalfTwistExpr::Kind::twist;
        e.bar = bar;
        e.twist_power = 1;
        raw_.push_back(std::move(eps));
        e.endpoints = {Endpoint{static_cast<int>(raw_.size()), 0}};  // placeholder
        return e;
    }

    HalfTwistExpr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected an expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            HalfTwistExpr e = parse_product(false);
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'Z') {
            ++pos_;
            bool bar = pos_ < text_.size() && text_[pos_] == 'b';
            if (bar) ++pos_;
            return parse_twist(bar);
        }
        if (c == 's') {
            ++pos_;
            int index = parse_int();
            if (index < 1) fail("generator index must be positive");
            return generator(index);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    HalfTwistExpr parse_term() {
        HalfTwistExpr e = parse_atom();
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '^') break;
            ++pos_;
            if (eat('{')) {
                std::vector<HalfTwistExpr> fs;
                while (!eat('}')) {
                    skip_ws();
                    if (pos_ >= text_.size()) fail("unterminated conjugator '{'");
                    fs.push_back(parse_term());
                }
                e = conjugated(std::move(e), product(std::move(fs)));
            } else {
                e = powered(std::move(e), parse_int());
            }
        }
        return e;
    }

    HalfTwistExpr parse_product(bool allow_empty) {
        std::vector<HalfTwistExpr> fs;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c == ')' || c == '}') break;
            fs.push_back(parse_term());
        }
        if (fs.empty() && !allow_empty) fail("empty expression");
        if (fs.size() == 1) return std::move(fs[0]);
        return product(std::move(fs));
    }

    // Replace placeholder endpoints now the labeling mode is known.
    void resolve(HalfTwistExpr& e) {
        if (e.kind == HalfTwistExpr::Kind::twist) {
            const auto& eps = raw_[static_cast<size_t>(e.endpoints[0].first) - 1];
            std::vector<Endpoint> resolved;
            for (const auto& ep : eps) {
                if (ep.range) {
                    if (ep.indices[0].primed || ep.indices[1].primed)
                        fail("ranges take unprimed indices");
                    int a = ep.indices[0].value, b = ep.indices[1].value;
                    if (a >= b) fail("range a..b needs a < b");
                    for (int v = a; v <= b; ++v)
                        resolved.push_back(single_endpoint(doubled_ ? 2 * v - 1 : v));
                    continue;
                }
                if (ep.indices.size() == 2) {
                    if (ep.indices[0].value != ep.indices[1].value || ep.indices[0].primed ||
                        !ep.indices[1].primed)
                        fail("a doubled endpoint is written `i i'`");
                    resolved.push_back(doubled_pair(ep.indices[0].value));
                    continue;
                }
                const RawIndex& ix = ep.indices[0];
                if (ix.value < 1) fail("indices must be positive");
                resolved.push_back(doubled_
                                       ? doubled_single(DoubledIndex{ix.value, ix.primed})
                                       : single_endpoint(ix.value));
            }
            std::sort(resolved.begin(), resolved.end(),
                      [](const Endpoint& a, const Endpoint& b) { return a.first < b.first; });
            e.endpoints = std::move(resolved);
            return;
        }
        for (auto& c : e.children) resolve(c);
    }

    std::vector<std::vector<RawEndpoint>> raw_;
};

}  // namespace

HalfTwistExpr parse_expr(const std::string& text) { return ExprParser(text).run(); }

BraidWord eval_text(const std::string& text, int strands) {
    if (strands < 1) throw parse_error("strand count must be positive", 0);
    return compile(parse_expr(text), strands);
}

std::string word_str(const BraidWord& w) {
    if (w.letters.empty()) return "e";
    std::string out;
    for (int l : w.letters) {
        if (!out.empty()) out += ' ';
        out += "s" + std::to_string(std::abs(l));
        if (l < 0) out += "^-1";
    }
    return out;
}

std::string permutation_str(const Permutation& p) {
    std::string out;
    for (const auto& c : p.cycles()) {
        if (c.size() < 2) continue;
        // print the cycle in traversal order
        out += "(";
        int start = c.front(), j = start;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = p.images[j];
        } while (j != start);
        out += ")";
    }
    return out.empty() ? "id" : out;
}

std::string normal_form_str(const NormalForm& nf) {
    std::string out = "D^" + std::to_string(nf.delta_power);
    for (const auto& f : nf.factors) {
        out += " [";
        bool first = true;
        for (int l : permutation_braid_word(f)) {
            if (!first) out += ' ';
            out += "s" + std::to_string(l);
            first = false;
        }
        out += "]";
    }
    return out;
}

Configuration configuration_from_json(const nlohmann::json& j) {
    Configuration c;
    c.name = j.value("name", "");
    if (!j.contains("components") || !j["components"].is_array())
        throw std::invalid_argument("config: missing components array");
    for (const auto& comp : j["components"]) {
        CurveComponent cc;
        cc.kind = comp.at("kind").get<std::string>();
        if (cc.kind != "line" && cc.kind != "conic")
            throw std::invalid_argument("config: components[].kind must be line or conic");
        cc.label = comp.value("label", "");
        c.components.push_back(std::move(cc));
    }
    c.strands = j.value("strands", 0);
    if (!j.contains("singularities") || !j["singularities"].is_array())
        throw std::invalid_argument("config: missing singularities array");
    int idx = 0;
    for (const auto& s : j["singularities"]) {
        ++idx;
        Singularity sg;
        sg.label = s.value("label", "");
        sg.type.kind = singularity_kind_from_string(s.at("type").get<std::string>());
        sg.type.multiplicity = s.value("multiplicity", 2);
        if (s.contains("incident"))
            for (const auto& inc : s["incident"]) sg.incident.push_back(inc.get<std::string>());
        try {
            sg.expr = parse_expr(s.at("expr").get<std::string>());
        } catch (const parse_error& e) {
            throw std::invalid_argument("config: singularities[" + std::to_string(idx - 1) +
                                        "].expr: " + e.what());
        }
        c.singularities.push_back(std::move(sg));
    }
    return c;
}

DegenerationDiagram diagram_from_json(const nlohmann::json& j) {
    DegenerationDiagram d;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("diagram: missing vertices array");
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("diagram: vertices[] entries are [x, y]");
        d.vertices.emplace_back(v[0].get<int>(), v[1].get<int>());
    }
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("diagram: missing edges array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("diagram: edges[] entries are [a, b, kind]");
        DiagramEdge de;
        de.a = e[0].get<int>();
        de.b = e[1].get<int>();
        std::string kind = e[2].get<std::string>();
        if (kind == "diag")
            de.kind = EdgeKind::diagonal;
        else if (kind == "horiz")
            de.kind = EdgeKind::horizontal;
        else if (kind == "vert")
            de.kind = EdgeKind::vertical;
        else
            throw std::invalid_argument("diagram: edge kind must be diag, horiz or vert");
        d.edges.push_back(de);
    }
    return d;
}

nlohmann::ordered_json jones_to_json(const LaurentPoly& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e) + "/2"] = c;
    return out;
}

nlohmann::ordered_json summary_to_json(const LinkSummary& s) {
    nlohmann::ordered_json out;
    out["strands"] = s.strands;
    out["components"] = s.components;
    out["linking_matrix"] = s.linking_matrix;
    out["self_writhes"] = s.self_writhes;
    out["jones"] = jones_to_json(s.jones);
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    for (const auto& p : s.per_component_jones) per.push_back(jones_to_json(p));
    out["per_component_jones"] = per;
    out["atlas_match"] = s.atlas_match;
    return out;
}

}  // namespace braidlink
