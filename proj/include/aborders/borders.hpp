#pragma once

#include <optional>

#include "aborders/word.hpp"

namespace aborders {

// Distinct abelian border lengths of one word, ascending, each in 1..n-1.
struct BorderSpectrum {
    int word_length = 0;
    std::vector<int> lengths;

    bool contains(int k) const;
    bool empty() const { return lengths.empty(); }
    int count() const { return static_cast<int>(lengths.size()); }
    std::optional<int> minimal() const;
    std::optional<int> maximal() const;
};

// Running difference between the Parikh vectors of the prefix and suffix read
// so far, with the magnitude sum_a |V[a]| maintained incrementally (one +-1
// adjustment per letter) and holes tallied instead of counted in V.
class DiffState {
public:
    explicit DiffState(int sigma);

    void read_prefix(int symbol);
    void read_suffix(int symbol);

    int magnitude() const { return magnitude_; }
    int holes_seen() const { return holes_; }
    // Border test: prefix and suffix of the current length are abelian
    // compatible iff |V| <= holes seen on both sides.
    bool compatible() const { return magnitude_ <= holes_; }

    // O(sigma) reference value for the incrementally maintained magnitude.
    int recompute_magnitude() const;

private:
    std::vector<int> diff_;
    int magnitude_ = 0;
    int holes_ = 0;
};

// Length of the shortest abelian border, or absent for unbordered words
// (possible only when w is total). O(n * sigma); total words stop at n/2.
std::optional<int> minimal_abelian_border(const PartialWord& w);

// All distinct abelian border lengths. Total words are scanned to n/2 and
// mirrored through the complementary-pair property; partial words need the
// full scan.
BorderSpectrum border_spectrum(const PartialWord& w);

int count_distinct_borders(const PartialWord& w);

}  // namespace aborders
