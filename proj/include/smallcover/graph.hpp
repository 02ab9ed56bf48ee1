#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace smallcover {

/// Fixed-size bitset over [0, size) used for adjacency rows and candidate sets.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] != 0) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
        }
        return -1;
    }

    NodeSet& operator&=(const NodeSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }

    /// Removes every member of `other`.
    NodeSet& subtract(const NodeSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }

    int intersection_count(const NodeSet& other) const {
        int c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & other.words_[k]);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
            }
        }
    }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on nodes 0..size-1; no loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(int size) : rows_(size, NodeSet(size)) {}

    int size() const { return static_cast<int>(rows_.size()); }

    void add_edge(int i, int j) {
        if (i == j) return;
        rows_[i].set(j);
        rows_[j].set(i);
    }

    bool adjacent(int i, int j) const { return rows_[i].test(j); }
    const NodeSet& neighbors(int i) const { return rows_[i]; }
    int degree(int i) const { return rows_[i].count(); }

    NodeSet all_nodes() const {
        NodeSet s(size());
        for (int i = 0; i < size(); ++i) s.set(i);
        return s;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<NodeSet> rows_;
};

}  // namespace smallcover
