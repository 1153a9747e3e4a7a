#include "core/vertex_set.hpp"

#include <bit>
#include <stdexcept>

namespace maxpi {

namespace {
constexpr std::uint64_t kOne = 1;

std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + 63) / 64);
}
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw std::invalid_argument("vertex set universe must be non-negative");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) add(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~static_cast<std::uint64_t>(0);
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() = (kOne << (universe % 64)) - 1;
    return s;
}

void VertexSet::check_member(int v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("vertex id out of range");
}

int VertexSet::size() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= universe_) return false;
    return (words_[v / 64] >> (v % 64)) & kOne;
}

void VertexSet::add(int v) {
    check_member(v);
    words_[v / 64] |= kOne << (v % 64);
}

void VertexSet::remove(int v) {
    check_member(v);
    words_[v / 64] &= ~(kOne << (v % 64));
}

void VertexSet::clear() {
    for (auto& w : words_) w = 0;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    VertexSet r = *this;
    r |= o;
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    VertexSet r = *this;
    r &= o;
    return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
    VertexSet r = *this;
    r -= o;
    return r;
}

VertexSet VertexSet::complement() const {
    VertexSet r = full(universe_);
    r -= *this;
    return r;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

int VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64) + __builtin_ctzll(words_[w]);
    return -1;
}

int VertexSet::next(int v) const {
    if (v < -1) v = -1;
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t w = static_cast<std::size_t>(start) / 64;
    std::uint64_t bits = words_[w] & (~static_cast<std::uint64_t>(0) << (start % 64));
    while (true) {
        if (bits) return static_cast<int>(w * 64) + __builtin_ctzll(bits);
        if (++w >= words_.size()) return -1;
        bits = words_[w];
    }
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](int v) {
        if (!first_member) s += ",";
        s += std::to_string(v);
        first_member = false;
    });
    s += "}";
    return s;
}

bool VertexSet::operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
}

// a < b on sorted member lists. With d = min(a xor b): if d is in a, then a is
// smaller exactly when b still has some member beyond d; symmetrically for b.
bool VertexSet::operator<(const VertexSet& o) const {
    if (universe_ != o.universe_) return universe_ < o.universe_;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t diff = words_[i] ^ o.words_[i];
        if (!diff) continue;
        int d = static_cast<int>(i * 64) + __builtin_ctzll(diff);
        if (contains(d)) {
            for (std::size_t j = i; j < words_.size(); ++j) {
                std::uint64_t rest = o.words_[j];
                if (j == i) rest &= ~((kOne << (d % 64)) - 1);
                if (rest) return true;
            }
            return false;
        }
        for (std::size_t j = i; j < words_.size(); ++j) {
            std::uint64_t rest = words_[j];
            if (j == i) rest &= ~((kOne << (d % 64)) - 1);
            if (rest) return false;
        }
        return true;
    }
    return false;
}

std::uint64_t VertexSet::hash() const {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(universe_);
    for (std::uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace maxpi
