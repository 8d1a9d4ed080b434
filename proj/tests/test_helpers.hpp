#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "braidlink/braid.hpp"

namespace testutil {

inline braidlink::BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    braidlink::BraidWord w;
    w.strands = strands;
    int count = len(rng);
    for (int i = 0; i < count; ++i) w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return w;
}

// One group-element-preserving rewrite: a free insertion, a far commutation
// or a braid-relation replacement at a random spot.
inline braidlink::BraidWord random_rewrite(const braidlink::BraidWord& w, std::mt19937& rng) {
    braidlink::BraidWord out = w;
    std::uniform_int_distribution<int> kind(0, 2);
    for (int attempt = 0; attempt < 8; ++attempt) {
        switch (kind(rng)) {
            case 0: {
                std::uniform_int_distribution<size_t> pos(0, out.letters.size());
                std::uniform_int_distribution<int> gen(1, out.strands - 1);
                std::uniform_int_distribution<int> sign(0, 1);
                size_t p = pos(rng);
                int g = gen(rng);
                int s = sign(rng) ? g : -g;
                out.letters.insert(out.letters.begin() + p, {s, -s});
                return out;
            }
            case 1: {
                std::vector<size_t> spots;
                for (size_t i = 0; i + 1 < out.letters.size(); ++i)
                    if (std::abs(std::abs(out.letters[i]) - std::abs(out.letters[i + 1])) >= 2)
                        spots.push_back(i);
                if (spots.empty()) break;
                std::uniform_int_distribution<size_t> pick(0, spots.size() - 1);
                size_t i = spots[pick(rng)];
                std::swap(out.letters[i], out.letters[i + 1]);
                return out;
            }
            case 2: {
                std::vector<size_t> spots;
                for (size_t i = 0; i + 2 < out.letters.size(); ++i) {
                    int a = out.letters[i], b = out.letters[i + 1], c = out.letters[i + 2];
                    bool same_sign = (a > 0) == (b > 0) && (b > 0) == (c > 0);
                    if (same_sign && a == c && std::abs(std::abs(a) - std::abs(b)) == 1)
                        spots.push_back(i);
                }
                if (spots.empty()) break;
                std::uniform_int_distribution<size_t> pick(0, spots.size() - 1);
                size_t i = spots[pick(rng)];
                int a = out.letters[i], b = out.letters[i + 1];
                out.letters[i] = b;
                out.letters[i + 1] = a;
                out.letters[i + 2] = b;
                return out;
            }
        }
    }
    return out;
}

inline braidlink::BraidWord random_rewrites(braidlink::BraidWord w, int count,
                                            std::mt19937& rng) {
    for (int i = 0; i < count; ++i) w = random_rewrite(w, rng);
    return w;
}

}  // namespace testutil
