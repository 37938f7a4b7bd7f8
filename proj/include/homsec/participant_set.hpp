#pragma once

// ParticipantSet: a subset of the participants {1..n} packed into one
// 64-bit word (participant i occupies bit i-1).  All set algebra used by
// the analysis is word-at-a-time; the only non-obvious operation is the
// lexicographic order, which compares the ascending member sequences
// (the order used for deterministic serialization), not the raw words.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace homsec {

inline constexpr int kMaxParticipants = 64;

class ParticipantSet {
public:
    constexpr ParticipantSet() = default;
    constexpr explicit ParticipantSet(std::uint64_t bits) : bits_(bits) {}

    ParticipantSet(std::initializer_list<int> members) {
        for (int m : members) bits_ |= bit(m);
    }

    static ParticipantSet full(int n) {
        return ParticipantSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int member) const { return (bits_ & bit(member)) != 0; }
    constexpr bool subset_of(const ParticipantSet& other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    constexpr ParticipantSet with(int member) const { return ParticipantSet(bits_ | bit(member)); }
    constexpr ParticipantSet without(int member) const {
        return ParticipantSet(bits_ & ~bit(member));
    }

    friend constexpr ParticipantSet operator|(ParticipantSet a, ParticipantSet b) {
        return ParticipantSet(a.bits_ | b.bits_);
    }
    friend constexpr ParticipantSet operator&(ParticipantSet a, ParticipantSet b) {
        return ParticipantSet(a.bits_ & b.bits_);
    }
    friend constexpr ParticipantSet operator-(ParticipantSet a, ParticipantSet b) {
        return ParticipantSet(a.bits_ & ~b.bits_);
    }

    friend constexpr bool operator==(ParticipantSet a, ParticipantSet b) = default;

    // Lexicographic order on the ascending member sequences.  Let d be the
    // smallest member on which the two sets differ: the set owning d comes
    // first, unless the other set has no member beyond d at all, in which
    // case it is a proper prefix and comes first instead.
    friend constexpr bool operator<(ParticipantSet a, ParticipantSet b) {
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        const std::uint64_t low = diff & (~diff + 1);
        const std::uint64_t at_or_above = ~(low - 1);
        if (a.bits_ & low) return (b.bits_ & at_or_above) != 0;
        return (a.bits_ & at_or_above) == 0;
    }

    int lowest() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (int m : members()) {
            if (!first) out += ' ';
            out += std::to_string(m);
            first = false;
        }
        out += '}';
        return out;
    }

private:
    static constexpr std::uint64_t bit(int member) { return std::uint64_t{1} << (member - 1); }

    std::uint64_t bits_ = 0;
};

inline bool lex_less(ParticipantSet a, ParticipantSet b) { return a < b; }

struct LexLess {
    bool operator()(ParticipantSet a, ParticipantSet b) const { return lex_less(a, b); }
};

// Lexicographic order on sequences of sets (chains, bases).
inline bool lex_less(const std::vector<ParticipantSet>& a, const std::vector<ParticipantSet>& b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (lex_less(a[i], b[i])) return true;
        if (lex_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

// Visit every m-subset of {1..n} in increasing word order (Gosper's hack).
template <typename Fn>
void for_each_subset_of_size(int n, int m, Fn&& fn) {
    if (m < 0 || m > n) return;
    if (m == 0) {
        fn(ParticipantSet{});
        return;
    }
    const std::uint64_t limit = ParticipantSet::full(n).bits();
    std::uint64_t x = (std::uint64_t{1} << m) - 1;
    while (x <= limit) {
        fn(ParticipantSet(x));
        const std::uint64_t u = x & (~x + 1);
        const std::uint64_t v = x + u;
        if (v == 0) break;
        x = v + (((v ^ x) / u) >> 2);
    }
}

// Visit every subset of {1..n} in increasing word order.
template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
    const std::uint64_t limit = ParticipantSet::full(n).bits();
    for (std::uint64_t x = 0;; ++x) {
        fn(ParticipantSet(x));
        if (x == limit) break;
    }
}

}  // namespace homsec
