#include "braidlink/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace braidlink {

namespace {

void check_same_strands(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("strand count mismatch: " + std::to_string(a.strands) +
                                    " vs " + std::to_string(b.strands));
}

std::vector<int> free_reduce_letters(std::vector<int> v) {
    std::vector<int> s;
    s.reserve(v.size());
    for (int l : v) {
        if (!s.empty() && s.back() == -l)
            s.pop_back();
        else
            s.push_back(l);
    }
    return s;
}

}  // namespace

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation q;
    q.images.resize(size());
    for (int i = 0; i < size(); ++i) q.images[images[i]] = i;
    return q;
}

Permutation Permutation::then(const Permutation& other) const {
    Permutation q;
    q.images.resize(size());
    for (int i = 0; i < size(); ++i) q.images[i] = other.images[images[i]];
    return q;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            c.push_back(j);
            j = images[j];
        }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

BraidWord braid(int strands, std::vector<int> letters) {
    BraidWord w{strands, std::move(letters)};
    validate(w);
    return w;
}

void validate(const BraidWord& w) {
    if (w.strands < 1) throw std::invalid_argument("strand count must be positive");
    for (int l : w.letters) {
        int g = std::abs(l);
        if (g < 1 || g > w.strands - 1)
            throw std::invalid_argument("letter index " + std::to_string(g) +
                                        " out of range for " + std::to_string(w.strands) +
                                        " strands");
    }
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    check_same_strands(a, b);
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& by) {
    check_same_strands(w, by);
    return concat(concat(inverse(by), w), by);
}

BraidWord power(const BraidWord& w, int k) {
    BraidWord base = k >= 0 ? w : inverse(w);
    BraidWord out;
    out.strands = w.strands;
    for (int i = 0; i < std::abs(k); ++i)
        out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
    return out;
}

BraidWord free_reduce(const BraidWord& w) {
    return BraidWord{w.strands, free_reduce_letters(w.letters)};
}

BraidWord rotate(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.letters.size());
    for (int l : w.letters) {
        int g = w.strands - std::abs(l);
        out.letters.push_back(l > 0 ? g : -g);
    }
    return out;
}

int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (int l : w.letters) s += l > 0 ? 1 : -1;
    return s;
}

Permutation permutation_image(const BraidWord& w) {
    Permutation p = Permutation::identity(w.strands);
    // track position-of-strand; letter g swaps the images landing on g, g+1
    Permutation inv = p;  // inv[pos] = strand currently at pos
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        int a = inv.images[g], b = inv.images[g + 1];
        std::swap(p.images[a], p.images[b]);
        std::swap(inv.images[g], inv.images[g + 1]);
    }
    return p;
}

Permutation delta_permutation(int n) {
    Permutation p;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = n - 1 - i;
    return p;
}

namespace {

// Conjugation of a permutation braid by D (an involution on factors).
Permutation tau(const Permutation& p) {
    int n = p.size();
    Permutation q;
    q.images.resize(n);
    for (int i = 0; i < n; ++i) q.images[i] = n - 1 - p.images[n - 1 - i];
    return q;
}

// Slides every generator that can move from the head of b to the tail of a.
// (a, b) is left-weighted exactly when nothing slides: every s_g starting b
// already finishes a.
bool rebalance(Permutation& a, Permutation& b) {
    int n = a.size();
    bool moved = false;
    Permutation ainv = a.inverse();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int g = 0; g + 1 < n; ++g) {
            // s_g starts b and a*s_g is still a permutation braid
            if (b.images[g] > b.images[g + 1] && ainv.images[g] < ainv.images[g + 1]) {
                int x = ainv.images[g], y = ainv.images[g + 1];
                std::swap(a.images[x], a.images[y]);
                std::swap(ainv.images[g], ainv.images[g + 1]);
                std::swap(b.images[g], b.images[g + 1]);
                progress = moved = true;
            }
        }
    }
    return moved;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
    validate(w);
    const int n = w.strands;
    const Permutation rho = delta_permutation(n);
    int delta = 0;
    std::vector<Permutation> fs;
    fs.reserve(w.letters.size());

    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        if (l > 0) {
            Permutation p = Permutation::identity(n);
            std::swap(p.images[g], p.images[g + 1]);
            fs.push_back(std::move(p));
        } else {
            // s_g^-1 = D^-1 * c; pull the D^-1 across the pending factors
            delta -= 1;
            for (auto& f : fs) f = tau(f);
            Permutation c = rho;
            std::swap(c.images[n - 1 - g], c.images[n - 2 - g]);
            fs.push_back(std::move(c));
        }
    }

    long guard = static_cast<long>(fs.size() + 2) * (fs.size() + 2) * n + 64;
    bool changed = true;
    while (changed) {
        if (--guard < 0) throw std::logic_error("normal form failed to stabilize");
        changed = false;
        for (int j = static_cast<int>(fs.size()) - 1; j >= 1; --j)
            if (rebalance(fs[j - 1], fs[j])) changed = true;
        std::vector<Permutation> kept;
        kept.reserve(fs.size());
        for (auto& f : fs) {
            if (f.is_identity()) {
                changed = true;
                continue;
            }
            if (f == rho) {
                delta += 1;
                for (auto& k : kept) k = tau(k);
                changed = true;
                continue;
            }
            kept.push_back(std::move(f));
        }
        fs = std::move(kept);
    }
    return NormalForm{n, delta, std::move(fs)};
}

bool equal(const BraidWord& a, const BraidWord& b) {
    check_same_strands(a, b);
    return normal_form(a) == normal_form(b);
}

namespace {

std::vector<int> cyclic_free_reduce(std::vector<int> v) {
    v = free_reduce_letters(std::move(v));
    while (v.size() >= 2 && v.front() == -v.back()) {
        v.erase(v.begin());
        v.pop_back();
        v = free_reduce_letters(std::move(v));
    }
    return v;
}

}  // namespace

BraidWord markov_destabilize(const BraidWord& w) {
    validate(w);
    BraidWord cur = w;
    long guard = static_cast<long>(w.letters.size() + 1) * (w.strands + 1) + 8;
    while (guard-- > 0) {
        cur.letters = cyclic_free_reduce(std::move(cur.letters));
        if (cur.strands <= 1) break;
        const int top = cur.strands - 1;
        int top_count = 0, bottom_count = 0;
        for (int l : cur.letters) {
            int g = std::abs(l);
            if (g == top) ++top_count;
            if (g == 1) ++bottom_count;
        }
        if (top_count == 1) {
            std::vector<int> rest;
            rest.reserve(cur.letters.size() - 1);
            for (int l : cur.letters)
                if (std::abs(l) != top) rest.push_back(l);
            cur.letters = std::move(rest);
            cur.strands -= 1;
            continue;
        }
        if (bottom_count == 1) {
            std::vector<int> rest;
            rest.reserve(cur.letters.size() - 1);
            for (int l : cur.letters)
                if (std::abs(l) != 1) rest.push_back(l > 0 ? l - 1 : l + 1);
            cur.letters = std::move(rest);
            cur.strands -= 1;
            continue;
        }
        break;
    }
    return cur;
}

std::vector<int> permutation_braid_word(const Permutation& p) {
    // peel generators off the right; length equals the inversion count
    Permutation cur = p;
    Permutation inv = p.inverse();
    std::vector<int> rev;
    for (;;) {
        int g = -1;
        for (int i = 0; i + 1 < cur.size(); ++i) {
            if (inv.images[i] > inv.images[i + 1]) {
                g = i;
                break;
            }
        }
        if (g < 0) break;
        rev.push_back(g + 1);
        int x = inv.images[g], y = inv.images[g + 1];
        std::swap(cur.images[x], cur.images[y]);
        std::swap(inv.images[g], inv.images[g + 1]);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

BraidWord normal_form_word(const NormalForm& nf) {
    BraidWord out;
    out.strands = nf.strands;
    std::vector<int> delta_word = half_twist_letters(1, nf.strands);
    for (int i = 0; i < std::abs(nf.delta_power); ++i) {
        if (nf.delta_power > 0)
            out.letters.insert(out.letters.end(), delta_word.begin(), delta_word.end());
        else
            for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it)
                out.letters.push_back(-*it);
    }
    for (const auto& f : nf.factors) {
        auto word = permutation_braid_word(f);
        out.letters.insert(out.letters.end(), word.begin(), word.end());
    }
    return out;
}

namespace {

// Crossing of the block at [s, s+p-1] with the block at [s+p, s+p+q-1];
// 1-based positions.  The negative crossing is the inverse of the positive
// crossing that starts from the swapped layout (q, p).
void append_block_crossing(std::vector<int>& out, int s, int p, int q, bool positive) {
    if (!positive) std::swap(p, q);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(p) * q);
    for (int a = s + p - 1; a >= s; --a)
        for (int c = 0; c < q; ++c) word.push_back(a + c);
    if (positive)
        out.insert(out.end(), word.begin(), word.end());
    else
        for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(-*it);
}

}  // namespace

BraidWord expand_strands(const BraidWord& w, const std::vector<int>& widths) {
    validate(w);
    if (static_cast<int>(widths.size()) != w.strands)
        throw std::invalid_argument("widths must have one entry per strand");
    for (int x : widths)
        if (x < 1) throw std::invalid_argument("strand width must be positive");
    std::vector<int> at(widths);  // widths by current position
    BraidWord out;
    out.strands = std::accumulate(widths.begin(), widths.end(), 0);
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        int s = 1;
        for (int x = 0; x < g; ++x) s += at[x];
        append_block_crossing(out.letters, s, at[g], at[g + 1], l > 0);
        std::swap(at[g], at[g + 1]);
    }
    return out;
}

std::vector<int> half_twist_letters(int start, int width) {
    std::vector<int> out;
    for (int c = 0; c < width - 1; ++c)
        for (int a = start + width - 2; a >= start + c; --a) out.push_back(a);
    return out;
}

}  // namespace braidlink
