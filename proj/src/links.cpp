#include "braidlink/links.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace braidlink {

std::vector<std::vector<int>> closure_components(const BraidWord& w) {
    auto cycles = permutation_image(w).cycles();
    std::vector<std::vector<int>> out;
    out.reserve(cycles.size());
    for (auto& c : cycles) {
        std::vector<int> comp;
        comp.reserve(c.size());
        for (int s : c) comp.push_back(s + 1);
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

LinkingData linking_data(const BraidWord& w) {
    validate(w);
    LinkingData d;
    d.components = closure_components(w);
    int m = static_cast<int>(d.components.size());
    std::vector<int> comp_of(w.strands + 1, 0);
    for (int c = 0; c < m; ++c)
        for (int s : d.components[c]) comp_of[s] = c;

    std::vector<std::vector<int>> signed_crossings(m, std::vector<int>(m, 0));
    d.self_writhes.assign(m, 0);
    std::vector<int> at(w.strands);  // strand at each position, 0-based strands
    std::iota(at.begin(), at.end(), 0);
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        int a = comp_of[at[g] + 1], b = comp_of[at[g + 1] + 1];
        int sign = l > 0 ? 1 : -1;
        if (a == b) {
            d.self_writhes[a] += sign;
        } else {
            signed_crossings[a][b] += sign;
            signed_crossings[b][a] += sign;
        }
        std::swap(at[g], at[g + 1]);
    }
    d.matrix.assign(m, std::vector<int>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            if (signed_crossings[a][b] % 2 != 0)
                throw std::logic_error("odd inter-component crossing count");
            d.matrix[a][b] = signed_crossings[a][b] / 2;
        }
    return d;
}

namespace {

// Planar pairing of 2n points: 0..n-1 on top, n..2n-1 on the bottom.
using Pairing = std::vector<int>;

Pairing identity_pairing(int n) {
    Pairing p(2 * n);
    for (int i = 0; i < n; ++i) {
        p[i] = n + i;
        p[n + i] = i;
    }
    return p;
}

// Stacks e_g under d (g is a 0-based generator index); returns the composed
// pairing and the number of closed loops produced.
std::pair<Pairing, int> compose_cup(const Pairing& d, int g, int n) {
    // pairing of the lower diagram e_g
    Pairing e(2 * n);
    for (int i = 0; i < n; ++i) {
        e[i] = n + i;
        e[n + i] = i;
    }
    e[g] = g + 1;
    e[g + 1] = g;
    e[n + g] = n + g + 1;
    e[n + g + 1] = n + g;

    Pairing out(2 * n, -1);
    std::vector<bool> mid_used(n, false);  // glued points: d-bottom i ~ e-top i
    auto trace = [&](int start_top, bool start_in_d) {
        // returns the boundary point where the path ends; marks middles
        bool in_d = start_in_d;
        int pt = start_top;
        for (;;) {
            int mate = in_d ? d[pt] : e[pt];
            if (in_d) {
                if (mate < n) return mate;  // top boundary
                mid_used[mate - n] = true;
                in_d = false;
                pt = mate - n;  // enter e at its top
            } else {
                if (mate >= n) return mate;  // bottom boundary
                mid_used[mate] = true;
                in_d = true;
                pt = n + mate;  // enter d at its bottom
            }
        }
    };
    for (int i = 0; i < n; ++i) {
        if (out[i] == -1) {
            int end = trace(i, true);
            out[i] = end;
            out[end] = i;
        }
        if (out[n + i] == -1) {
            int end = trace(n + i, false);
            out[n + i] = end;
            out[end] = n + i;
        }
    }
    // glued points not reached from the boundary lie on closed loops;
    // each loop alternates an arc of e and an arc of d
    int loops = 0;
    std::vector<bool> visited = mid_used;
    for (int i = 0; i < n; ++i) {
        if (visited[i]) continue;
        ++loops;
        int pt = i;
        do {
            visited[pt] = true;
            int through_e = e[pt];
            if (through_e >= n) throw std::logic_error("loop escaped to boundary");
            visited[through_e] = true;
            int through_d = d[n + through_e];
            if (through_d < n) throw std::logic_error("loop escaped to boundary");
            pt = through_d - n;
        } while (pt != i);
    }
    return {out, loops};
}

int closure_loops(const Pairing& d, int n) {
    std::vector<bool> seen(2 * n, false);
    int loops = 0;
    for (int i = 0; i < 2 * n; ++i) {
        if (seen[i]) continue;
        ++loops;
        int pt = i;
        while (!seen[pt]) {
            seen[pt] = true;
            int mate = d[pt];
            seen[mate] = true;
            pt = mate < n ? mate + n : mate - n;  // closure arc
        }
    }
    return loops;
}

LaurentPoly loop_value() {
    // delta = -A^2 - A^-2
    return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
}

}  // namespace

LaurentPoly kauffman_bracket(const BraidWord& w) {
    validate(w);
    const int n = w.strands;
    if (n > kMaxJonesStrands)
        throw unsupported_feature("bracket limited to " + std::to_string(kMaxJonesStrands) +
                                  " strands");
    const LaurentPoly delta = loop_value();
    std::map<Pairing, LaurentPoly> state;
    state[identity_pairing(n)] = LaurentPoly::one();
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        LaurentPoly pass = LaurentPoly::monomial(1, l > 0 ? 1 : -1);
        LaurentPoly smooth = LaurentPoly::monomial(1, l > 0 ? -1 : 1);
        std::map<Pairing, LaurentPoly> next;
        for (const auto& [dia, coeff] : state) {
            next[dia] += coeff * pass;
            auto [dia2, loops] = compose_cup(dia, g, n);
            next[dia2] += coeff * smooth * delta.pow(loops);
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        state = std::move(next);
    }
    LaurentPoly out;
    for (const auto& [dia, coeff] : state)
        out += coeff * delta.pow(closure_loops(dia, n) - 1);
    return out;
}

LaurentPoly jones(const BraidWord& w) {
    LaurentPoly bracket = kauffman_bracket(w);
    int writhe = exponent_sum(w);
    // (-A)^{-3w} <closure>
    LaurentPoly v = bracket.shifted(-3 * writhe).scaled((3 * writhe) % 2 == 0 ? 1 : -1);
    // substitute t^{1/2} = A^-2
    LaurentPoly out;
    for (const auto& [e, c] : v.terms()) {
        if (e % 2 != 0) throw std::logic_error("odd exponent after writhe normalization");
        out += LaurentPoly::monomial(c, -e / 2);
    }
    return out;
}

BraidWord torus_braid(int p, int q) {
    if (p < 1 || q < 0) throw std::invalid_argument("torus braid needs p >= 1, q >= 0");
    BraidWord w;
    w.strands = p;
    for (int r = 0; r < q; ++r)
        for (int i = 1; i < p; ++i) w.letters.push_back(i);
    return w;
}

BraidWord extract_component(const BraidWord& w, const std::vector<int>& component) {
    validate(w);
    auto comps = closure_components(w);
    std::vector<int> sorted = component;
    std::sort(sorted.begin(), sorted.end());
    if (std::find(comps.begin(), comps.end(), sorted) == comps.end())
        throw std::invalid_argument("not a closure component of the braid");

    std::vector<bool> keep(w.strands + 1, false);
    for (int s : sorted) keep[s] = true;
    std::vector<int> at(w.strands);
    std::iota(at.begin(), at.end(), 1);
    BraidWord out;
    out.strands = static_cast<int>(sorted.size());
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        if (keep[at[g]] && keep[at[g + 1]]) {
            int rank = 0;
            for (int x = 0; x <= g; ++x)
                if (keep[at[x]]) ++rank;
            out.letters.push_back(l > 0 ? rank : -rank);
        }
        std::swap(at[g], at[g + 1]);
    }
    return out;
}

CableResult cable(const BraidWord& w, const CableSpec& spec) {
    validate(w);
    if (spec.copies < 1) throw std::invalid_argument("cable needs at least one copy");
    LinkingData d = linking_data(w);
    if (spec.component < 0 || spec.component >= static_cast<int>(d.components.size()))
        throw std::invalid_argument("unknown component");
    const auto& comp = d.components[spec.component];

    std::vector<int> widths(w.strands, 1);
    for (int s : comp) widths[s - 1] = spec.copies;
    CableResult r;
    r.blackboard_framing = d.self_writhes[spec.component];
    r.word = expand_strands(w, widths);
    if (spec.twists != 0 && spec.copies > 1) {
        int first = comp.front();
        int start = 1;
        for (int s = 1; s < first; ++s) start += widths[s - 1];
        std::vector<int> half = half_twist_letters(start, spec.copies);
        std::vector<int> pre;
        for (int i = 0; i < std::abs(spec.twists); ++i) {
            if (spec.twists > 0)
                pre.insert(pre.end(), half.begin(), half.end());
            else
                for (auto it = half.rbegin(); it != half.rend(); ++it) pre.push_back(-*it);
        }
        r.word.letters.insert(r.word.letters.begin(), pre.begin(), pre.end());
    }
    return r;
}

std::vector<int> linking_profile(const std::vector<std::vector<int>>& matrix) {
    std::vector<int> out;
    for (size_t a = 0; a < matrix.size(); ++a)
        for (size_t b = a + 1; b < matrix.size(); ++b) out.push_back(matrix[a][b]);
    std::sort(out.begin(), out.end());
    return out;
}

LinkSummary summarize(const BraidWord& w) {
    LinkSummary s;
    s.strands = w.strands;
    LinkingData d = linking_data(w);
    s.components = std::move(d.components);
    s.linking_matrix = std::move(d.matrix);
    s.self_writhes = std::move(d.self_writhes);
    s.jones = jones(w);
    for (const auto& comp : s.components) s.per_component_jones.push_back(jones(extract_component(w, comp)));
    s.atlas_match = identify(s);
    return s;
}

namespace {

struct AtlasEntry {
    std::string name;
    int components;
    std::vector<int> profile;
    LaurentPoly jones;
};

LinkSummary model_summary(const BraidWord& w) {
    LinkSummary s;
    s.strands = w.strands;
    LinkingData d = linking_data(w);
    s.components = std::move(d.components);
    s.linking_matrix = std::move(d.matrix);
    s.jones = jones(w);
    return s;
}

const std::vector<AtlasEntry>& atlas() {
    static const std::vector<AtlasEntry> table = [] {
        std::vector<AtlasEntry> t;
        auto add = [&t](const std::string& name, const BraidWord& w) {
            LinkSummary s = model_summary(w);
            t.push_back(AtlasEntry{name, static_cast<int>(s.components.size()),
                                   linking_profile(s.linking_matrix), s.jones});
        };
        add("unknot", BraidWord{1, {}});
        for (int m = 2; m <= 6; ++m) add("unlink-" + std::to_string(m), BraidWord{m, {}});
        add("L2a1", torus_braid(2, 2));
        add("L4a1 / T(2,4)", torus_braid(2, 4));
        for (int m = 3; m <= 6; ++m)
            add("T(" + std::to_string(m) + "," + std::to_string(m) + ")", torus_braid(m, m));
        return t;
    }();
    return table;
}

}  // namespace

std::string identify(const LinkSummary& s) {
    std::vector<int> profile = linking_profile(s.linking_matrix);
    std::vector<int> negated = profile;
    for (int& x : negated) x = -x;
    std::sort(negated.begin(), negated.end());
    for (const auto& e : atlas()) {
        if (e.components != static_cast<int>(s.components.size())) continue;
        if (profile != e.profile && negated != e.profile) continue;
        if (unit_monomial_equivalent(s.jones, e.jones) ||
            unit_monomial_equivalent(s.jones, e.jones.mirrored()))
            return e.name;
    }
    return "unidentified";
}

bool same_summary(const LinkSummary& a, const LinkSummary& b) {
    // strand counts per component depend on the presentation, so only the
    // closure invariants are compared
    if (a.components.size() != b.components.size()) return false;
    if (linking_profile(a.linking_matrix) != linking_profile(b.linking_matrix)) return false;
    return a.jones == b.jones;
}

}  // namespace braidlink
