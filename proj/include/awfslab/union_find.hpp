#pragma once
#include <cstddef>
#include <numeric>
#include <vector>

namespace awfslab {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[b < a ? a : b] = (b < a ? b : a); // keep least index as root
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace awfslab
