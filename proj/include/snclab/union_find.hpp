#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace snclab {

/// Disjoint sets over 0..n-1. The representative of a class is always its
/// smallest member, so class labels are deterministic.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), count_(n)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
        --count_;
        return true;
    }

    std::size_t components() const { return count_; }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::size_t count_;
};

} // namespace snclab
