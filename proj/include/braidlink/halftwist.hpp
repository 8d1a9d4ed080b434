#pragma once

#include <vector>

#include "braidlink/braid.hpp"

namespace braidlink {

// One endpoint of a half-twist: a single strand, or a contiguous block that
// travels as a unit (a regenerated pair i, i' occupying strands 2i-1, 2i).
struct Endpoint {
    int first = 1;
    int width = 1;

    int last() const { return first + width - 1; }
    bool operator==(const Endpoint&) const = default;
};

// Expression tree for the Z-notation.  A `twist` node is the half twist of
// its endpoints along a path below (or, barred, above) the strands in
// between, raised to an integer power; consecutive single endpoints give the
// usual chain.  `letters` holds a literal word.  All reasoning happens on
// the compiled BraidWord; the tree itself is never rewritten.
struct HalfTwistExpr {
    enum class Kind { twist, letters, product, conjugate, inverse };

    Kind kind = Kind::product;
    // twist payload
    std::vector<Endpoint> endpoints;
    bool bar = false;
    int twist_power = 1;
    // letters payload
    BraidWord word;
    // product: any number of factors, multiplied left to right
    // conjugate: children = {base, conjugator}, meaning conj^-1 * base * conj
    // inverse: children = {sub}
    std::vector<HalfTwistExpr> children;
};

HalfTwistExpr z(int i, int j, int power = 1, bool bar = false);
HalfTwistExpr zbar(int i, int j, int power = 1);
// Z_{i, i+1, ..., i+k}
HalfTwistExpr chain(int i, int k, int power = 1);
HalfTwistExpr twist(std::vector<Endpoint> endpoints, int power = 1, bool bar = false);
HalfTwistExpr letters(BraidWord w);
HalfTwistExpr generator(int index);  // single letter s_index (index may be negative)
HalfTwistExpr product(std::vector<HalfTwistExpr> factors);
HalfTwistExpr conjugated(HalfTwistExpr base, HalfTwistExpr by);
HalfTwistExpr inverted(HalfTwistExpr sub);
HalfTwistExpr powered(HalfTwistExpr base, int k);

BraidWord compile(const HalfTwistExpr& e, int strands);

// Regenerated labels: component i splits into strands 2i-1 (plain) and 2i
// (primed).
struct DoubledIndex {
    int base = 1;
    bool primed = false;
};
int doubled_strand(DoubledIndex d);
Endpoint single_endpoint(int strand);
Endpoint doubled_single(DoubledIndex d);
Endpoint doubled_pair(int component);  // block {2i-1, 2i}

// Rewrites a +-2 power twist with doubled-pair endpoints into the product of
// plain two-strand twists it stands for.  Plain expressions pass through.
HalfTwistExpr pair_expand(const HalfTwistExpr& e);

}  // namespace braidlink
