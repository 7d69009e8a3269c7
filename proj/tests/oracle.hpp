#pragma once

// Naive reference implementations used only by the tests. They share no
// code with the library beyond the multiplication table: subgroups are
// found by scanning every subset that contains the identity, and product
// sets are literal element sets. Exponential in the group order, so keep
// callers at order <= 16.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclofact/group.hpp"

namespace oracle {

inline bool mask_closed(const cyclofact::FiniteGroup& g, std::uint64_t m) {
    for (unsigned a = 0; a < g.order(); ++a) {
        if (!(m >> a & 1)) continue;
        for (unsigned b = 0; b < g.order(); ++b) {
            if (!(m >> b & 1)) continue;
            if (!(m >> g.mul(a, b) & 1)) return false;
        }
    }
    return true;
}

// Every subgroup of g as a bitmask over element ids, sorted ascending.
inline std::vector<std::uint64_t> subgroup_masks(const cyclofact::FiniteGroup& g) {
    if (g.order() > 20) throw std::runtime_error("oracle limited to order <= 20");
    std::vector<std::uint64_t> out;
    const std::uint64_t all = (1ULL << g.order()) - 1;
    for (std::uint64_t m = 1; m <= all; m += 2)
        if (mask_closed(g, m)) out.push_back(m);
    return out;
}

inline std::uint64_t cyclic_mask(const cyclofact::FiniteGroup& g, unsigned e) {
    std::uint64_t m = 0;
    unsigned x = 0;
    do {
        m |= 1ULL << x;
        x = g.mul(x, e);
    } while (x != 0);
    return m;
}

inline bool mask_is_cyclic(const cyclofact::FiniteGroup& g, std::uint64_t m) {
    for (unsigned e = 0; e < g.order(); ++e)
        if ((m >> e & 1) && cyclic_mask(g, e) == m) return true;
    return false;
}

inline std::uint64_t product_mask(const cyclofact::FiniteGroup& g,
                                  std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    for (unsigned x = 0; x < g.order(); ++x) {
        if (!(a >> x & 1)) continue;
        for (unsigned y = 0; y < g.order(); ++y)
            if (b >> y & 1) out |= 1ULL << g.mul(x, y);
    }
    return out;
}

// Smallest subgroup containing the given element set.
inline std::uint64_t closure_mask(const cyclofact::FiniteGroup& g, std::uint64_t seed) {
    std::uint64_t m = seed | 1;
    for (;;) {
        std::uint64_t grown = m;
        for (unsigned a = 0; a < g.order(); ++a) {
            if (!(m >> a & 1)) continue;
            for (unsigned b = 0; b < g.order(); ++b)
                if (m >> b & 1) grown |= 1ULL << g.mul(a, b);
        }
        if (grown == m) return m;
        m = grown;
    }
}

inline long long pair_count(const cyclofact::FiniteGroup& g, bool cyclic_only) {
    const std::uint64_t full = (1ULL << g.order()) - 1;
    auto subs = subgroup_masks(g);
    long long n = 0;
    for (auto a : subs) {
        if (cyclic_only && !mask_is_cyclic(g, a)) continue;
        for (auto b : subs) {
            if (cyclic_only && !mask_is_cyclic(g, b)) continue;
            if (product_mask(g, a, b) == full) ++n;
        }
    }
    return n;
}

inline long long cf2(const cyclofact::FiniteGroup& g) { return pair_count(g, true); }
inline long long f2(const cyclofact::FiniteGroup& g) { return pair_count(g, false); }

// Returns {permuting pairs, total pairs} over all subgroups, or over the
// cyclic ones only.
inline std::pair<long long, long long> permuting_pairs(const cyclofact::FiniteGroup& g,
                                                       bool cyclic_only) {
    auto subs = subgroup_masks(g);
    if (cyclic_only) {
        std::vector<std::uint64_t> keep;
        for (auto m : subs)
            if (mask_is_cyclic(g, m)) keep.push_back(m);
        subs = keep;
    }
    long long hits = 0;
    for (auto a : subs)
        for (auto b : subs)
            if (product_mask(g, a, b) == product_mask(g, b, a)) ++hits;
    return {hits, static_cast<long long>(subs.size()) * static_cast<long long>(subs.size())};
}

}  // namespace oracle
