#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace braidlink {

// Raised when a computation is outside the supported range (k-points with
// k >= 4, Jones on more than kMaxJonesStrands strands).
struct unsupported_feature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word in the Artin generators of B_n.  Letters are nonzero signed
// indices: +k is the generator s_k (strand at position k crosses over
// position k+1), -k its inverse.  Words are stored exactly as built; nothing
// reduces implicitly, so intermediate expressions can be displayed verbatim.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

// Bijection of {0..n-1}.  images[i] is where top position i lands at the
// bottom.  Words compose top to bottom: (uv)[i] = v[u[i]].
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(images.size()); }
    bool is_identity() const;
    Permutation inverse() const;
    Permutation then(const Permutation& other) const;
    std::vector<std::vector<int>> cycles() const;  // each sorted, 0-based

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images < o.images; }
};

// Left-greedy canonical form D^k f_1 ... f_r.  Factors are permutation
// braids, none equal to the identity or to D, and consecutive factors are
// left-weighted.  Equal braid words map to identical NormalForm values.
struct NormalForm {
    int strands = 1;
    int delta_power = 0;
    std::vector<Permutation> factors;

    bool operator==(const NormalForm&) const = default;
};

BraidWord braid(int strands, std::vector<int> letters);
void validate(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
// The convention throughout is a^b = b^-1 a b.
BraidWord conjugate(const BraidWord& w, const BraidWord& by);
BraidWord power(const BraidWord& w, int k);
BraidWord free_reduce(const BraidWord& w);
// s_k -> s_{n-k}: reflection of the diagram in a vertical line.
BraidWord rotate(const BraidWord& w);
int exponent_sum(const BraidWord& w);
Permutation permutation_image(const BraidWord& w);
NormalForm normal_form(const BraidWord& w);
// Same element of B_n; strand counts must agree.
bool equal(const BraidWord& a, const BraidWord& b);

// Greedy Markov destabilization.  Repeatedly free-reduces the word as a
// cyclic word, then deletes a strand whenever the top generator s_{n-1}
// (or the bottom generator s_1, with reindexing) occurs exactly once.
// Every step preserves the closure link; terminates within
// (length x strands) rounds.
BraidWord markov_destabilize(const BraidWord& w);

Permutation delta_permutation(int n);
// A reduced word for the positive permutation braid of p.
std::vector<int> permutation_braid_word(const Permutation& p);
BraidWord normal_form_word(const NormalForm& nf);

// Replaces strand s by widths[s-1] parallel strands; letters become block
// crossings.  widths is indexed by position at the top of the word.
BraidWord expand_strands(const BraidWord& w, const std::vector<int>& widths);
// Positive half twist of `width` adjacent strands starting at position
// `start` (empty for width 1).
std::vector<int> half_twist_letters(int start, int width);

}  // namespace braidlink
