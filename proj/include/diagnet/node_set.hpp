#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace diagnet {

/// Dense, zero-based node index.
using NodeId = std::uint32_t;

/**
 * A set of nodes over a fixed universe [0, universe_size), one bit per node.
 *
 * All binary operations require both operands to share the same universe.
 * Up to 128 nodes are stored inline, so temporaries in the search loops do
 * not touch the heap for the graph sizes brute force can handle.
 */
class NodeSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;

    NodeSet() = default;

    explicit NodeSet(std::size_t universe)
        : universe_(universe), words_(word_count(universe), Word{0}) {}

    NodeSet(std::size_t universe, std::initializer_list<NodeId> nodes) : NodeSet(universe) {
        for (auto v : nodes) insert(v);
    }

    static NodeSet from(std::size_t universe, std::span<const NodeId> nodes) {
        NodeSet s(universe);
        for (auto v : nodes) s.insert(v);
        return s;
    }

    static NodeSet full(std::size_t universe) {
        NodeSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    std::size_t universe_size() const noexcept { return universe_; }

    void insert(NodeId v) {
        assert(v < universe_);
        words_[v / bits_per_word] |= Word{1} << (v % bits_per_word);
    }

    void erase(NodeId v) {
        assert(v < universe_);
        words_[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word));
    }

    bool contains(NodeId v) const {
        assert(v < universe_);
        return (words_[v / bits_per_word] >> (v % bits_per_word)) & Word{1};
    }

    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or universe_size() when empty.
    NodeId first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<NodeId>(i * bits_per_word + std::countr_zero(words_[i]));
        return static_cast<NodeId>(universe_);
    }

    /// Smallest member strictly greater than v, or universe_size().
    NodeId next(NodeId v) const noexcept {
        std::size_t pos = static_cast<std::size_t>(v) + 1;
        if (pos >= universe_) return static_cast<NodeId>(universe_);
        std::size_t i = pos / bits_per_word;
        Word w = words_[i] & (~Word{0} << (pos % bits_per_word));
        while (true) {
            if (w) return static_cast<NodeId>(i * bits_per_word + std::countr_zero(w));
            if (++i == words_.size()) return static_cast<NodeId>(universe_);
            w = words_[i];
        }
    }

    NodeSet& operator|=(const NodeSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    NodeSet& operator&=(const NodeSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    NodeSet& operator-=(const NodeSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    NodeSet& operator^=(const NodeSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }
    friend NodeSet operator^(NodeSet a, const NodeSet& b) { return a ^= b; }

    /// Removes every member <= v.
    NodeSet& keep_above(NodeId v) {
        const std::size_t cut = static_cast<std::size_t>(v) + 1;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const std::size_t lo = i * bits_per_word;
            if (lo + bits_per_word <= cut)
                words_[i] = 0;
            else if (lo < cut)
                words_[i] &= ~Word{0} << (cut - lo);
        }
        return *this;
    }

    /// Complement within the universe.
    NodeSet complement() const {
        NodeSet r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool intersects(const NodeSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const NodeSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// |this ∩ o| without materializing the intersection.
    std::size_t count_common(const NodeSet& o) const {
        assert(universe_ == o.universe_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    /// |this - o| without materializing the difference.
    std::size_t count_outside(const NodeSet& o) const {
        assert(universe_ == o.universe_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
        return c;
    }

    std::vector<NodeId> to_vector() const {
        std::vector<NodeId> out;
        out.reserve(count());
        for (NodeId v : *this) out.push_back(v);
        return out;
    }

    friend bool operator==(const NodeSet& a, const NodeSet& b) {
        return a.universe_ == b.universe_ &&
               std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
    }

    /// Forward iterator over members in ascending order.
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = NodeId;
        using difference_type = std::ptrdiff_t;
        using pointer = const NodeId*;
        using reference = NodeId;

        const_iterator() = default;
        const_iterator(const NodeSet* s, NodeId v) : set_(s), cur_(v) {}

        NodeId operator*() const { return cur_; }
        const_iterator& operator++() {
            cur_ = set_->next(cur_);
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.cur_ == b.cur_; }

    private:
        const NodeSet* set_ = nullptr;
        NodeId cur_ = 0;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, static_cast<NodeId>(universe_)}; }

    std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

private:
    static std::size_t word_count(std::size_t universe) { return (universe + bits_per_word - 1) / bits_per_word; }

    void trim() {
        if (universe_ % bits_per_word != 0 && !words_.empty())
            words_.back() &= (Word{1} << (universe_ % bits_per_word)) - 1;
    }

    std::size_t universe_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

/// Lexicographic comparison of the sorted member sequences.
bool lexicographically_less(const NodeSet& a, const NodeSet& b);

}  // namespace diagnet
