#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace maxpi {

// Subset of {0..universe-1} backed by a word array. Value type with exact set
// algebra; comparison order is lexicographic on the sorted member list, which
// is the tie-break order used everywhere in the solver.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);

    static VertexSet full(int universe);

    int universe() const { return universe_; }
    int size() const;
    bool empty() const;
    bool contains(int v) const;

    void add(int v);
    void remove(int v);
    void clear();

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    VertexSet operator|(const VertexSet& o) const;
    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator-(const VertexSet& o) const;
    VertexSet complement() const;

    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    // Smallest member, or -1 when empty.
    int first() const;
    // Smallest member > v, or -1 when none.
    int next(int v) const;

    std::vector<int> members() const;
    std::string to_string() const;

    bool operator==(const VertexSet& o) const;
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    // Sorted-member-list lexicographic order.
    bool operator<(const VertexSet& o) const;

    std::uint64_t hash() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int v = static_cast<int>(w * 64) + __builtin_ctzll(bits);
                fn(v);
                bits &= bits - 1;
            }
        }
    }

private:
    void check_member(int v) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return static_cast<std::size_t>(s.hash()); }
};

}  // namespace maxpi
