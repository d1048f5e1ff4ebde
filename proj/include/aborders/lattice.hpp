#pragma once

#include "aborders/bigint.hpp"
#include "aborders/word.hpp"

namespace aborders {

struct LatticePoint {
    int x = 0;  // zeros read so far
    int y = 0;  // ones read so far
    bool operator==(const LatticePoint&) const = default;
};

// Monotone path on Z^2: right for each 0, up for each 1. points[t] is the
// position after t steps, points[0] the origin.
struct LatticePath {
    std::vector<LatticePoint> points;
};

struct LatticeView {
    LatticePath prefix_path;  // word read left to right
    LatticePath suffix_path;  // word read right to left
    std::vector<int> meeting_lengths;  // k in 1..n-1 where the paths coincide
};

// heights[t] = |V| after t steps; zero exactly at the abelian border lengths
// (and t = 0, t = n) for total binary words.
struct MotzkinView {
    std::vector<int> heights;
};

LatticeView lattice_view(const PartialWord& w);
MotzkinView motzkin_view(const PartialWord& w);

// |V| profile with holes skipped; defined for any partial word, but the
// Motzkin-path structure is only guaranteed for total binary input.
std::vector<int> magnitude_profile(const PartialWord& w);

// C_n = binom(2n, n) / (n + 1); counts Dyck words of length 2n.
BigInt catalan(int n);

// N(n, r) = binom(n, r) * binom(n, r-1) / n; counts Dyck paths of length 2n
// with r peaks. Requires 1 <= r <= n.
BigInt narayana(int n, int r);

}  // namespace aborders
