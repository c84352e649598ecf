#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace rmq {

using TableId = std::uint16_t;

/// A set of query tables encoded as a 128 bit mask.  Used as the key of
/// every plan table (plan cache, DP table).
class TableSet {
  public:
    static constexpr std::size_t kMaxTables = 128;

    constexpr TableSet() = default;
    constexpr TableSet(std::initializer_list<TableId> tables) {
        for (auto t : tables) bits_ |= one(t);
    }

    static constexpr TableSet single(TableId t) { return from_bits(one(t)); }
    /// {0, ..., n-1}
    static constexpr TableSet first_n(std::size_t n) {
        if (n >= kMaxTables) return from_bits(~Bits{0});
        return from_bits((Bits{1} << n) - 1);
    }

    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const {
        return std::popcount(static_cast<std::uint64_t>(bits_)) +
               std::popcount(static_cast<std::uint64_t>(bits_ >> 64));
    }
    constexpr bool contains(TableId t) const { return (bits_ & one(t)) != 0; }
    constexpr bool is_subset_of(TableSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(TableSet other) const { return (bits_ & other.bits_) != 0; }

    /// Smallest member; the set must be nonempty.
    constexpr TableId lowest() const {
        auto lo = static_cast<std::uint64_t>(bits_);
        if (lo != 0) return static_cast<TableId>(std::countr_zero(lo));
        return static_cast<TableId>(64 + std::countr_zero(static_cast<std::uint64_t>(bits_ >> 64)));
    }

    constexpr TableSet &insert(TableId t) { bits_ |= one(t); return *this; }
    constexpr TableSet &erase(TableId t) { bits_ &= ~one(t); return *this; }

    constexpr TableSet operator|(TableSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr TableSet operator&(TableSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr TableSet operator-(TableSet o) const { return from_bits(bits_ & ~o.bits_); }
    constexpr bool operator==(const TableSet &) const = default;
    constexpr bool operator<(const TableSet &o) const { return bits_ < o.bits_; }

    /// Next nonempty subset of `super` below this one in the standard
    /// `(sub - 1) & super` submask walk.  Returns the empty set at the end.
    constexpr TableSet next_submask(TableSet super) const { return from_bits((bits_ - 1) & super.bits_); }

    /// Calls `f(t)` for every member in ascending order.
    template <typename F>
    constexpr void for_each(F &&f) const {
        for (Bits b = bits_; b != 0; b &= b - 1) f(lowest_of(b));
    }

    std::vector<TableId> members() const {
        std::vector<TableId> out;
        out.reserve(size());
        for_each([&](TableId t) { out.push_back(t); });
        return out;
    }

    std::size_t hash() const {
        auto lo = static_cast<std::uint64_t>(bits_);
        auto hi = static_cast<std::uint64_t>(bits_ >> 64);
        std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x7f4a7c159e3779b9ULL + (lo << 6) + (lo >> 2));
        h ^= h >> 29;
        return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ULL);
    }

    std::string to_string() const;

  private:
    using Bits = unsigned __int128;

    static constexpr Bits one(TableId t) { return Bits{1} << t; }
    static constexpr TableSet from_bits(Bits b) { TableSet s; s.bits_ = b; return s; }
    static constexpr TableId lowest_of(Bits b) {
        auto lo = static_cast<std::uint64_t>(b);
        if (lo != 0) return static_cast<TableId>(std::countr_zero(lo));
        return static_cast<TableId>(64 + std::countr_zero(static_cast<std::uint64_t>(b >> 64)));
    }

    Bits bits_ = 0;
};

struct TableSetHash {
    std::size_t operator()(const TableSet &s) const { return s.hash(); }
};

} // namespace rmq
