#ifndef TRUEMPER_VERTEX_SET_HPP
#define TRUEMPER_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace truemper {

using Vertex = int;

/// Fixed-universe bitset over the vertex indices [0, universe).
///
/// Every set operation is a word-wise bulk operation. Binary operations
/// require both operands to share the same universe size.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet* set, int word) : set_(set), word_(word) { advance_to_valid(); }

        Vertex operator*() const { return word_ * kWordBits + std::countr_zero(current_); }
        iterator& operator++() {
            current_ &= current_ - 1;
            if (current_ == 0) {
                ++word_;
                advance_to_valid();
            }
            return *this;
        }
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& other) const {
            return word_ == other.word_ && current_ == other.current_;
        }

    private:
        void advance_to_valid() {
            const int words = set_ ? static_cast<int>(set_->words_.size()) : 0;
            while (word_ < words) {
                current_ = set_->words_[word_];
                if (current_ != 0) return;
                ++word_;
            }
            word_ = words;
            current_ = 0;
        }

        const VertexSet* set_ = nullptr;
        int word_ = 0;
        Word current_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_(static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits), 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }
    template <typename Range>
    static VertexSet from_range(int universe, const Range& members) {
        VertexSet s(universe);
        for (Vertex v : members) s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    void insert(Vertex v) { words_[word_of(v)] |= bit_of(v); }
    void erase(Vertex v) { words_[word_of(v)] &= ~bit_of(v); }
    bool contains(Vertex v) const {
        return v >= 0 && v < universe_ && (words_[word_of(v)] & bit_of(v)) != 0;
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }
    /// Smallest member, or -1 when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<Vertex>(i) * kWordBits + std::countr_zero(words_[i]);
        return -1;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }
    /// |this ∩ other| without materializing the intersection.
    int count_common(const VertexSet& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const {
        VertexSet c(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    bool operator==(const VertexSet& other) const = default;
    /// Orders sets by their sorted member lists (lexicographic).
    bool lex_less(const VertexSet& other) const {
        auto a = begin(), ae = end();
        auto b = other.begin(), be = other.end();
        for (; a != ae && b != be; ++a, ++b)
            if (*a != *b) return *a < *b;
        return a == ae && b != be;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, static_cast<int>(words_.size())); }

    const std::vector<Word>& words() const { return words_; }

private:
    static std::size_t word_of(Vertex v) { return static_cast<std::size_t>(v) / kWordBits; }
    static Word bit_of(Vertex v) { return Word{1} << (static_cast<unsigned>(v) % kWordBits); }
    void trim() {
        const int extra = static_cast<int>(words_.size()) * kWordBits - universe_;
        if (extra > 0 && !words_.empty()) words_.back() &= ~Word{0} >> extra;
    }

    int universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace truemper

#endif  // TRUEMPER_VERTEX_SET_HPP
