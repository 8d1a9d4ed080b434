#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "braidlink/braid.hpp"
#include "braidlink/laurent.hpp"

namespace testutil {

// Exhaustive Kauffman bracket: every crossing is smoothed both ways and the
// circles of each of the 2^c flat diagrams are counted with a union-find
// over arc ids.  Deliberately shares nothing with the Temperley-Lieb sweep
// it cross-checks.
inline braidlink::LaurentPoly bracket_state_sum(const braidlink::BraidWord& w) {
    using braidlink::LaurentPoly;
    const int n = w.strands;
    const size_t c = w.letters.size();
    if (c > 20) throw std::invalid_argument("state sum limited to 20 crossings");
    const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    LaurentPoly total;
    std::vector<int> parent(n + c + 1);
    for (size_t mask = 0; mask < (size_t{1} << c); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int loops = 0;
        int next_arc = n;
        std::vector<int> cur(n);
        std::iota(cur.begin(), cur.end(), 0);
        int exp = 0;
        for (size_t t = 0; t < c; ++t) {
            int l = w.letters[t];
            int g = std::abs(l) - 1;
            bool cap = (mask >> t) & 1;
            exp += (l > 0 ? 1 : -1) * (cap ? -1 : 1);
            if (!cap) continue;
            int a = find(cur[g]), b = find(cur[g + 1]);
            if (a == b)
                ++loops;
            else
                parent[a] = b;
            cur[g] = cur[g + 1] = next_arc++;
        }
        for (int i = 0; i < n; ++i) {
            int a = find(cur[i]), b = find(i);
            if (a == b)
                ++loops;
            else
                parent[a] = b;
        }
        total += LaurentPoly::monomial(1, exp) * delta.pow(loops - 1);
    }
    return total;
}

}  // namespace testutil
