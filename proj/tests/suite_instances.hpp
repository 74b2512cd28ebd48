#pragma once

#include <vector>

namespace suite {

struct Instance {
    std::vector<int> jordan;
    std::vector<int> dims;
};

inline const std::vector<std::vector<int>>& partitions() {
    static const std::vector<std::vector<int>> parts = {{1}, {2}, {1, 1}, {3}, {2, 1}, {2, 2}, {3, 1}, {2, 1, 1}, {3, 2}};
    return parts;
}

// complete flags, every single dimension 1..d, and one two-step vector
inline std::vector<std::vector<int>> dimension_vectors(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> complete;
    for (int k = 1; k <= d; ++k) complete.push_back(k);
    out.push_back(complete);
    for (int k = 1; k <= d; ++k)
        if (std::vector<int>{k} != complete) out.push_back({k});
    const std::vector<int> two = d >= 3 ? std::vector<int>{1, d - 1} : d == 2 ? std::vector<int>{1, 2} : std::vector<int>{0, 1};
    bool seen = false;
    for (const auto& v : out) seen = seen || v == two;
    if (!seen) out.push_back(two);
    return out;
}

inline std::vector<Instance> instances() {
    std::vector<Instance> out;
    for (const auto& p : partitions()) {
        int d = 0;
        for (int v : p) d += v;
        for (auto& k : dimension_vectors(d)) out.push_back({p, k});
    }
    return out;
}

} // namespace suite
