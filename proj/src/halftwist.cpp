#include "braidlink/halftwist.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace braidlink {

HalfTwistExpr z(int i, int j, int power, bool bar) {
    if (i >= j) throw std::invalid_argument("Z indices must satisfy i < j");
    return twist({Endpoint{i, 1}, Endpoint{j, 1}}, power, bar);
}

HalfTwistExpr zbar(int i, int j, int power) { return z(i, j, power, true); }

HalfTwistExpr chain(int i, int k, int power) {
    if (i < 1 || k < 1) throw std::invalid_argument("chain needs i >= 1, k >= 1");
    std::vector<Endpoint> eps;
    for (int s = i; s <= i + k; ++s) eps.push_back(Endpoint{s, 1});
    return twist(std::move(eps), power);
}

HalfTwistExpr twist(std::vector<Endpoint> endpoints, int power, bool bar) {
    HalfTwistExpr e;
    e.kind = HalfTwistExpr::Kind::twist;
    e.endpoints = std::move(endpoints);
    e.twist_power = power;
    e.bar = bar;
    return e;
}

HalfTwistExpr letters(BraidWord w) {
    HalfTwistExpr e;
    e.kind = HalfTwistExpr::Kind::letters;
    e.word = std::move(w);
    return e;
}

HalfTwistExpr generator(int index) {
    HalfTwistExpr e;
    e.kind = HalfTwistExpr::Kind::letters;
    e.word.strands = std::abs(index) + 1;
    e.word.letters = {index};
    return e;
}

HalfTwistExpr product(std::vector<HalfTwistExpr> factors) {
    HalfTwistExpr e;
    e.kind = HalfTwistExpr::Kind::product;
    e.children = std::move(factors);
    return e;
}

HalfTwistExpr conjugated(HalfTwistExpr base, HalfTwistExpr by) {
    HalfTwistExpr e;
    e.kind = HalfTwistExpr::Kind::conjugate;
    e.children.push_back(std::move(base));
    e.children.push_back(std::move(by));
    return e;
}

HalfTwistExpr inverted(HalfTwistExpr sub) {
    HalfTwistExpr e;
    e.kind = HalfTwistExpr::Kind::inverse;
    e.children.push_back(std::move(sub));
    return e;
}

HalfTwistExpr powered(HalfTwistExpr base, int k) {
    if (base.kind == HalfTwistExpr::Kind::twist) {
        base.twist_power *= k;
        return base;
    }
    if (k < 0) return powered(inverted(std::move(base)), -k);
    std::vector<HalfTwistExpr> fs;
    for (int i = 0; i < k; ++i) fs.push_back(base);
    return product(std::move(fs));
}

namespace {

void check_endpoints(const std::vector<Endpoint>& eps, int n) {
    if (eps.size() < 2) throw std::invalid_argument("a twist needs at least two endpoints");
    for (size_t g = 0; g < eps.size(); ++g) {
        if (eps[g].width < 1) throw std::invalid_argument("endpoint width must be positive");
        if (eps[g].first < 1 || eps[g].last() > n)
            throw std::invalid_argument("endpoint " + std::to_string(eps[g].first) + ".." +
                                        std::to_string(eps[g].last()) + " out of range for " +
                                        std::to_string(n) + " strands");
        if (g > 0 && eps[g - 1].last() >= eps[g].first)
            throw std::invalid_argument("endpoints must be disjoint and increasing");
    }
}

BraidWord compile_twist(const HalfTwistExpr& e, int n) {
    check_endpoints(e.endpoints, n);
    const int k = static_cast<int>(e.endpoints.size());

    // fat-strand picture: each endpoint is one strand, everything else width 1
    std::vector<int> widths;
    std::vector<int> reduced_pos(k, 0);  // 1-based positions of the endpoints
    {
        int s = 1, g = 0;
        while (s <= n) {
            if (g < k && e.endpoints[g].first == s) {
                reduced_pos[g] = static_cast<int>(widths.size()) + 1;
                widths.push_back(e.endpoints[g].width);
                s = e.endpoints[g].last() + 1;
                ++g;
            } else {
                widths.push_back(1);
                ++s;
            }
        }
    }
    const int reduced_n = static_cast<int>(widths.size());
    const int top = reduced_pos[k - 1];

    // gather the endpoints just below the top one, passing under (bar: over)
    // the strands in between
    std::vector<int> transport;
    for (int g = k - 2; g >= 0; --g) {
        int target = top - (k - 1 - g);
        for (int pos = reduced_pos[g]; pos < target; ++pos)
            transport.push_back(e.bar ? -pos : pos);
    }

    // half twist of the k adjacent endpoints, then the power
    std::vector<int> core = half_twist_letters(top - k + 1, k);
    std::vector<int> body;
    for (int r = 0; r < std::abs(e.twist_power); ++r) {
        if (e.twist_power >= 0)
            body.insert(body.end(), core.begin(), core.end());
        else
            for (auto it = core.rbegin(); it != core.rend(); ++it) body.push_back(-*it);
    }

    BraidWord reduced;
    reduced.strands = reduced_n;
    reduced.letters = transport;
    reduced.letters.insert(reduced.letters.end(), body.begin(), body.end());
    for (auto it = transport.rbegin(); it != transport.rend(); ++it)
        reduced.letters.push_back(-*it);

    return expand_strands(reduced, widths);
}

}  // namespace

BraidWord compile(const HalfTwistExpr& e, int strands) {
    switch (e.kind) {
        case HalfTwistExpr::Kind::twist:
            return compile_twist(e, strands);
        case HalfTwistExpr::Kind::letters: {
            if (e.word.strands > strands)
                throw std::invalid_argument("literal word needs more strands than available");
            BraidWord w = e.word;
            w.strands = strands;
            validate(w);
            return w;
        }
        case HalfTwistExpr::Kind::product: {
            BraidWord out;
            out.strands = strands;
            for (const auto& f : e.children) out = concat(out, compile(f, strands));
            return out;
        }
        case HalfTwistExpr::Kind::conjugate:
            return conjugate(compile(e.children[0], strands), compile(e.children[1], strands));
        case HalfTwistExpr::Kind::inverse:
            return inverse(compile(e.children[0], strands));
    }
    throw std::logic_error("unreachable");
}

int doubled_strand(DoubledIndex d) { return d.primed ? 2 * d.base : 2 * d.base - 1; }

Endpoint single_endpoint(int strand) { return Endpoint{strand, 1}; }

Endpoint doubled_single(DoubledIndex d) { return Endpoint{doubled_strand(d), 1}; }

Endpoint doubled_pair(int component) { return Endpoint{2 * component - 1, 2}; }

HalfTwistExpr pair_expand(const HalfTwistExpr& e) {
    switch (e.kind) {
        case HalfTwistExpr::Kind::twist:
            break;
        case HalfTwistExpr::Kind::letters:
            return e;
        default: {
            HalfTwistExpr out = e;
            for (auto& c : out.children) c = pair_expand(c);
            return out;
        }
    }
    int wide = -1;
    for (size_t g = 0; g < e.endpoints.size(); ++g)
        if (e.endpoints[g].width > 1) {
            wide = static_cast<int>(g);
            break;
        }
    if (wide < 0) return e;
    if (e.endpoints[wide].width != 2 || std::abs(e.twist_power) != 2)
        throw std::invalid_argument("pair expansion handles power +-2 twists of width-2 blocks");

    // split the block; for positive unbarred (and negative barred) twists the
    // half nearer the partner comes first
    HalfTwistExpr hi = e, lo = e;
    hi.endpoints[wide] = Endpoint{e.endpoints[wide].first + 1, 1};
    lo.endpoints[wide] = Endpoint{e.endpoints[wide].first, 1};
    bool higher_first = (e.twist_power > 0) != e.bar;
    std::vector<HalfTwistExpr> fs;
    fs.push_back(pair_expand(higher_first ? hi : lo));
    fs.push_back(pair_expand(higher_first ? lo : hi));
    // flatten nested expansions
    std::vector<HalfTwistExpr> flat;
    for (auto& f : fs) {
        if (f.kind == HalfTwistExpr::Kind::product)
            for (auto& c : f.children) flat.push_back(std::move(c));
        else
            flat.push_back(std::move(f));
    }
    return product(std::move(flat));
}

}  // namespace braidlink
