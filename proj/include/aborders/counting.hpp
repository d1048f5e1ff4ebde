#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aborders/bigint.hpp"
#include "aborders/word.hpp"

namespace aborders {

// Binary total words of length n with minimal abelian border k:
// 2^(n-2k+1) * C_(k-1), for 1 <= k <= n/2.
BigInt count_minimal_border_total(int n, int k);

// Binary words (total or partial -- the counts coincide) of length n with no
// abelian borders: binom(n, n/2) for even n, 2*binom(n-1, (n-1)/2) for odd n.
BigInt count_unbordered(int n);

// Binary total words of length n with exactly m distinct abelian borders
// (four-case piecewise form; zero when n and m are both odd).
BigInt count_with_m_borders(int n, int m);

// Binary words of length 2k with j holes and minimal abelian border k:
// 2 * binom(k, j) * C_(k-1) for k >= 2 (zero for j > k, where any j holes
// would force a border shorter than k).
BigInt g2(int k, int j);

// The k = 1 seed counts: sigma words of length 2 with no holes, 2*sigma with
// one; with h >= 2 allowed, 1 with two holes and 0 beyond.
BigInt g_sigma_k1(int sigma, int j, int h);

using GFunction = std::function<BigInt(int k, int j)>;

// Partial words of length n >= 2k with h holes over sigma letters and minimal
// abelian border k: sum_j g(k,j) * binom(n-2k, h-j) * sigma^(n-2k-h+j).
BigInt count_minimal_border_partial(int n, int k, int h, int sigma, const GFunction& g);

// Same count for sigma = 2, k >= 2 in closed product form:
// f(n,k,h) = 2^(n-2k+1) * C_(k-1) * sum_j binom(k,j) binom(n-2k,h-j) 2^(j-h).
BigInt count_minimal_border_partial_binary(int n, int k, int h);

// Binary one-hole partial words of even length n with n-1 distinct abelian
// borders: 4 * (3^(n/2) - 2^(n/2)).
BigInt count_one_hole_max_borders_even(int n);

// The same words up to letter renaming and reversal, bucketed by hole
// position i: 2^i * 3^(n/2-1-i) for i in 0..n/2-1.
std::vector<BigInt> unique_max_borders_by_position(int n);

// Unique binary one-hole words of even length n with minimal abelian border
// n-1, counted by the letter content of the first half.
struct UniqueMinimalCounts {
    BigInt no_ones_first_half;    // (n/2-1) * 2^(n/2-2)
    BigInt one_zero_first_half;   // 1, the word 0.1^(n-2)
    BigInt two_zeros_first_half;  // n^2/4 - n/2 - 2
    BigInt one_one_first_half;    // (n/2-2) * (2^(n/2-2) * (n/2-3) + 1)
};
UniqueMinimalCounts unique_minimal_nminus1_counts(int n);

// Representative of the four-element symmetry class (letter renaming x
// reversal): exactly one hole, placed in the first half, and the first
// non-hole letter is 0.
bool is_unique_one_hole(const PartialWord& w);

namespace detail {

// Ordered pairs of increasing lattice paths of length p from the origin that
// intersect exactly q times after the origin and end at different points:
// 2^q binom(2p-q, p) - q 2^q (2p-q-1)!/(p!(p-q)!). Requires 0 <= q <= p.
BigInt path_pairs_intersecting(int p, int q);

}  // namespace detail

// Parameter tuple for a counted quantity, e.g. {{"n",6},{"k",2},{"h",1}}.
struct ParamKey {
    std::vector<std::pair<std::string, long>> values;

    std::string str() const;  // "n=6;k=2;h=1"
    auto operator<=>(const ParamKey&) const = default;
};

// Pairs formula-derived and oracle-derived counts per parameter tuple; both
// must agree wherever both are present.
class CountTable {
public:
    struct Entry {
        std::optional<BigInt> formula;
        std::optional<BigInt> oracle;
    };

    void record_formula(const ParamKey& key, BigInt value);
    void record_oracle(const ParamKey& key, BigInt value);

    const std::map<ParamKey, Entry>& entries() const { return entries_; }
    bool consistent() const;

private:
    std::map<ParamKey, Entry> entries_;
};

}  // namespace aborders
