#pragma once

#include <string>
#include <vector>

#include "braidlink/braid.hpp"
#include "braidlink/laurent.hpp"

namespace braidlink {

// Temperley-Lieb dimension bound: Catalan(10) = 16796 basis diagrams.
inline constexpr int kMaxJonesStrands = 10;

// Cycles of the underlying permutation; strands in one cycle close up into
// one link component.  1-based, each cycle sorted, cycles ordered by their
// smallest strand.
std::vector<std::vector<int>> closure_components(const BraidWord& w);

struct LinkingData {
    std::vector<std::vector<int>> components;
    std::vector<std::vector<int>> matrix;  // lk between components, zero diagonal
    std::vector<int> self_writhes;         // signed self-crossings per component
};
LinkingData linking_data(const BraidWord& w);

// Bracket of the closure in the variable A, normalized so the unknot is 1.
// Computed by sweeping the word through the Temperley-Lieb algebra and
// closing with the trace.
LaurentPoly kauffman_bracket(const BraidWord& w);
// V(closure) as a polynomial in t^{1/2} (exponent k stands for t^{k/2}).
LaurentPoly jones(const BraidWord& w);

// (s1 s2 ... s_{p-1})^q on p strands; closure is the torus link T(p, q).
BraidWord torus_braid(int p, int q);

// Deletes every strand not in `component` (1-based strand set) and
// reindexes; crossings involving a deleted strand vanish.
BraidWord extract_component(const BraidWord& w, const std::vector<int>& component);

struct CableSpec {
    int component = 0;  // index into closure_components(w)
    int copies = 1;
    int twists = 0;  // half-twist crossings inserted on the parallel copies
};
struct CableResult {
    BraidWord word;
    // self-writhe of the cabled component in the original diagram; the
    // inserted twists come on top of this blackboard framing
    int blackboard_framing = 0;
};
CableResult cable(const BraidWord& w, const CableSpec& spec);

struct LinkSummary {
    int strands = 1;
    std::vector<std::vector<int>> components;
    std::vector<std::vector<int>> linking_matrix;
    std::vector<int> self_writhes;
    LaurentPoly jones;  // in t^{1/2}
    std::vector<LaurentPoly> per_component_jones;
    std::string atlas_match;
};
LinkSummary summarize(const BraidWord& w);

// Sorted off-diagonal linking numbers (upper triangle).
std::vector<int> linking_profile(const std::vector<std::vector<int>>& matrix);

// Matches against the built-in table (unknot, unlinks, L2a1, L4a1 = T(2,4),
// T(m,m) for m <= 6) by component count, linking profile up to global sign,
// and Jones up to mirror and a unit monomial.  "unidentified" otherwise.
std::string identify(const LinkSummary& s);

// Same link data up to relabeling of components and mirror-free equality:
// component count, component sizes, linking profile, Jones.
bool same_summary(const LinkSummary& a, const LinkSummary& b);

}  // namespace braidlink
