#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace holeforge {

using Vertex = int;

/// Fixed-capacity set of vertex indices 0..capacity-1, stored as a bitset.
/// Sets up to 128 vertices live inline; larger ones spill to the heap.
class VertexSet
{
public:
    class const_iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet * set, Vertex v) : set_(set), v_(v) {}

        auto operator*() const -> Vertex { return v_; }
        auto operator++() -> const_iterator &
        {
            v_ = set_->next(v_);
            return *this;
        }
        auto operator++(int) -> const_iterator
        {
            auto old = *this;
            ++*this;
            return old;
        }
        auto operator==(const const_iterator & other) const -> bool { return v_ == other.v_; }

    private:
        const VertexSet * set_ = nullptr;
        Vertex v_ = -1;
    };

    VertexSet() = default;
    explicit VertexSet(int capacity) : words_(word_count(capacity), 0), capacity_(capacity) {}

    static auto full(int capacity) -> VertexSet
    {
        VertexSet s(capacity);
        for (auto & w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static auto of(int capacity, std::initializer_list<Vertex> members) -> VertexSet
    {
        VertexSet s(capacity);
        for (auto v : members)
            s.insert(v);
        return s;
    }

    template <typename Range>
    static auto from_range(int capacity, const Range & members) -> VertexSet
    {
        VertexSet s(capacity);
        for (auto v : members)
            s.insert(static_cast<Vertex>(v));
        return s;
    }

    auto capacity() const -> int { return capacity_; }

    auto contains(Vertex v) const -> bool
    {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear()
    {
        for (auto & w : words_)
            w = 0;
    }

    auto size() const -> int
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    auto empty() const -> bool
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or -1.
    auto first() const -> Vertex
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    auto next(Vertex v) const -> Vertex
    {
        auto from = static_cast<std::size_t>(v + 1);
        if (from >= static_cast<std::size_t>(capacity_))
            return -1;
        std::size_t i = from >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<Vertex>(i * 64 + std::countr_zero(w));
            if (++i == words_.size())
                return -1;
            w = words_[i];
        }
    }

    auto begin() const -> const_iterator { return {this, first()}; }
    auto end() const -> const_iterator { return {this, -1}; }

    auto operator&=(const VertexSet & o) -> VertexSet &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    auto operator|=(const VertexSet & o) -> VertexSet &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    auto operator-=(const VertexSet & o) -> VertexSet &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    auto complement() const -> VertexSet
    {
        VertexSet s = *this;
        for (auto & w : s.words_)
            w = ~w;
        s.trim();
        return s;
    }

    auto intersects(const VertexSet & o) const -> bool
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    auto intersection_size(const VertexSet & o) const -> int
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    auto is_subset_of(const VertexSet & o) const -> bool
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    auto to_vector() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (auto v : *this)
            out.push_back(v);
        return out;
    }

    auto operator==(const VertexSet & o) const -> bool
    {
        return capacity_ == o.capacity_ && words_ == o.words_;
    }

    auto operator<(const VertexSet & o) const -> bool
    {
        // lexicographic on sorted member lists
        auto a = first(), b = o.first();
        while (a != -1 && b != -1) {
            if (a != b)
                return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a == -1 && b != -1;
    }

    auto hash() const -> std::size_t
    {
        std::size_t h = static_cast<std::size_t>(capacity_);
        for (auto w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    /// Raw word access; bits beyond capacity are always zero.
    auto word(std::size_t i) const -> std::uint64_t { return words_[i]; }
    auto word_count() const -> std::size_t { return words_.size(); }

private:
    static auto word_count(int capacity) -> std::size_t { return (static_cast<std::size_t>(capacity) + 63) / 64; }

    void trim()
    {
        if (capacity_ & 63)
            words_.back() &= (std::uint64_t{1} << (capacity_ & 63)) - 1;
    }

    boost::container::small_vector<std::uint64_t, 2> words_;
    int capacity_ = 0;
};

struct VertexSetHash
{
    auto operator()(const VertexSet & s) const -> std::size_t { return s.hash(); }
};

} // namespace holeforge
