#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace jg {

// Union-find with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int32_t find(int32_t x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    void unite(int32_t a, int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[static_cast<std::size_t>(a)] <
            size_[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] +=
            size_[static_cast<std::size_t>(b)];
    }

    // Sizes of all components, largest first.
    std::vector<long> component_sizes() {
        std::vector<long> out;
        for (std::size_t v = 0; v < parent_.size(); ++v)
            if (find(static_cast<int32_t>(v)) == static_cast<int32_t>(v))
                out.push_back(size_[v]);
        std::sort(out.rbegin(), out.rend());
        return out;
    }

private:
    std::vector<int32_t> parent_;
    std::vector<long> size_;
};

}  // namespace jg
