#pragma once
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "awfslab/union_find.hpp"

namespace awfslab {

// Set-level pushout bookkeeping shared by the graph and semi-simplicial
// instances: cells tagged base-side (false) or attached-side (true) are
// identified via union-find; class names prefer the base side (items sort
// base-first and the union-find root is the least member), and pure-attached
// classes get a '#k' suffix when they collide with a base name.
struct PushoutQuotient {
    std::vector<std::pair<bool, std::string>> items;
    UnionFind uf;

    explicit PushoutQuotient(std::vector<std::pair<bool, std::string>> xs)
        : items([&] {
              std::sort(xs.begin(), xs.end());
              return std::move(xs);
          }()),
          uf(items.size()) {}

    std::size_t index(bool side, const std::string& name) const {
        auto it = std::lower_bound(items.begin(), items.end(), std::make_pair(side, name));
        return static_cast<std::size_t>(it - items.begin());
    }

    std::string repr(bool side, const std::string& name, const std::set<std::string>& taken_base,
                     std::map<std::size_t, std::string>& memo) {
        std::size_t root = uf.find(index(side, name));
        auto it = memo.find(root);
        if (it != memo.end()) return it->second;
        std::string best = items[root].second;
        if (items[root].first) {
            std::string cand = best;
            int k = 0;
            while (taken_base.count(cand)) cand = best + "#" + std::to_string(++k);
            best = cand;
        }
        memo[root] = best;
        return best;
    }
};

} // namespace awfslab
