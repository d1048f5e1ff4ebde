#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aborders {

// Marker for an undefined position. Letters are indices 0..sigma-1.
inline constexpr int kHole = -1;

struct Alphabet {
    int sigma;

    explicit Alphabet(int s) : sigma(s) {
        if (s < 1) throw std::invalid_argument("alphabet size must be >= 1");
    }
    bool operator==(const Alphabet&) const = default;
};

// Per-letter occurrence counts; holes are never counted.
using ParikhVector = std::vector<int>;

class PartialWord {
public:
    PartialWord(std::vector<std::int8_t> symbols, Alphabet alphabet);

    int size() const { return static_cast<int>(symbols_.size()); }
    int sigma() const { return alphabet_.sigma; }
    const Alphabet& alphabet() const { return alphabet_; }

    // Returns the letter index at i, or kHole.
    int at(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    int operator[](int i) const { return at(i); }
    bool is_hole(int i) const { return at(i) == kHole; }

    int hole_count() const { return holes_; }
    bool total() const { return holes_ == 0; }
    bool binary() const { return alphabet_.sigma == 2; }

    PartialWord prefix(int k) const;
    PartialWord suffix(int k) const;
    PartialWord reversed() const;
    // Binary letter swap 0<->1; holes stay holes.
    PartialWord complemented() const;

    const std::vector<std::int8_t>& symbols() const { return symbols_; }

    // Canonical text form: digits, then 'a'.. for indices >= 10, '.' for holes.
    std::string str() const;

    bool operator==(const PartialWord&) const = default;

private:
    std::vector<std::int8_t> symbols_;
    Alphabet alphabet_;
    int holes_;
};

// Parses '.'-for-hole word text. Digit mode maps '0'-'9' (and for sigma > 10
// also 'a'-'z' as 10..35); pure alphabetic text with sigma <= 10 maps 'a'->0.
PartialWord parse_word(std::string_view text, int sigma);

ParikhVector parikh(const PartialWord& w);

// True iff some permutation of u is compatible with v; for equal-length words
// this reduces to sum_a |psi(u)[a] - psi(v)[a]| <= holes(u) + holes(v).
bool abelian_compatible(const PartialWord& u, const PartialWord& v);

// All sigma^h total words obtained by filling holes, ordered lexicographically
// by the filled tuple (equivalently by the resulting words).
std::vector<PartialWord> completions(const PartialWord& w);

}  // namespace aborders
