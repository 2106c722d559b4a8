#pragma once

#include <cstddef>
#include <vector>

namespace ke {

/// Visits every non-empty subset of {0..m-1} by increasing size, then
/// lexicographic order on the ascending index sequence. The callback
/// returns false to stop; the function returns false when stopped early.
template <typename Fn>
bool for_each_subfamily(std::size_t m, Fn&& fn) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 1; k <= m; ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (!fn(const_cast<const std::vector<std::size_t>&>(idx))) return false;
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

/// Visits every unordered pair of disjoint non-empty subsets of {0..m-1}
/// exactly once. The combined support is enumerated by (size, lex); within
/// a support the side holding its lowest index plays the first role, which
/// suppresses the symmetric duplicate. Splits go by first-side size, then
/// lexicographic choice.
template <typename Fn>
bool for_each_disjoint_pair(std::size_t m, Fn&& fn) {
    return for_each_subfamily(m, [&](const std::vector<std::size_t>& u) {
        const std::size_t s = u.size();
        if (s < 2) return true;
        std::vector<std::size_t> g1, g2, pick;
        for (std::size_t k = 1; k < s; ++k) {
            pick.resize(k - 1);
            for (std::size_t i = 0; i + 1 < k; ++i) pick[i] = i;  // positions into u[1..]
            while (true) {
                g1.clear();
                g2.clear();
                g1.push_back(u[0]);
                std::size_t p = 0;
                for (std::size_t r = 1; r < s; ++r) {
                    if (p < pick.size() && pick[p] == r - 1) {
                        g1.push_back(u[r]);
                        ++p;
                    } else {
                        g2.push_back(u[r]);
                    }
                }
                if (!fn(g1, g2)) return false;
                if (k == 1) break;
                std::size_t i = k - 1;
                while (i > 0 && pick[i - 1] == (s - 1) - (k - 1) + (i - 1)) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j + 1 < k; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return true;
    });
}

}  // namespace ke
