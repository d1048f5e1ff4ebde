#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "aborders/borders.hpp"
#include "aborders/counting.hpp"
#include "aborders/report.hpp"
#include "aborders/word.hpp"

namespace aborders {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

enum class WordFilter { none, unique, starts_with_zero, hole_position };

struct EnumerationSpec {
    int n = 0;
    int sigma = 2;
    int holes = 0;
    WordFilter filter = WordFilter::none;
    int hole_position = -1;  // used with WordFilter::hole_position
};

// Random-access lexicographic enumeration (holes sort before letter 0) of all
// binom(n,h) * sigma^(n-h) partial words with exactly h holes. Random access
// lets worker threads own disjoint index slices.
class Enumeration {
public:
    explicit Enumeration(EnumerationSpec spec, std::uint64_t cap = kDefaultEnumerationCap);

    std::uint64_t size() const { return size_; }  // before filtering
    PartialWord at(std::uint64_t index) const;
    bool passes_filter(const PartialWord& w) const;

    const EnumerationSpec& spec() const { return spec_; }

    // Applies fn to every filtered word of [first, last) in index order.
    void for_each(std::uint64_t first, std::uint64_t last,
                  const std::function<void(const PartialWord&)>& fn) const;
    void for_each(const std::function<void(const PartialWord&)>& fn) const;

private:
    EnumerationSpec spec_;
    std::uint64_t size_ = 0;
    std::vector<std::vector<std::uint64_t>> choose_;  // binom table
    std::vector<std::uint64_t> sigma_pow_;
};

// Reference border computations: one abelian_compatible test per length from
// freshly cut prefix/suffix words. Shares no state with the linear-time scan.
BorderSpectrum naive_border_spectrum(const PartialWord& w);
std::optional<int> naive_minimal_border(const PartialWord& w);

// Histogram of minimal border lengths over a full enumeration; slot k counts
// words with minimal border k, slot 0 the unbordered ones. Results are
// identical for any worker count.
std::vector<std::uint64_t> tally_minimal_border(int n, int h, int sigma, int workers = 1,
                                                std::uint64_t cap = kDefaultEnumerationCap);

// Histogram of distinct-border counts; slot m counts words with m of them.
std::vector<std::uint64_t> tally_distinct_borders(int n, int h, int sigma, int workers = 1,
                                                  std::uint64_t cap = kDefaultEnumerationCap);

BigInt oracle_count_minimal(int n, int k, int h, int sigma, int workers = 1,
                            std::uint64_t cap = kDefaultEnumerationCap);
BigInt oracle_count_m_borders(int n, int m, int h, int sigma, int workers = 1,
                              std::uint64_t cap = kDefaultEnumerationCap);

// g_sigma(k, j) by direct enumeration (length 2k, j holes, minimal border k),
// memoized per returned closure.
GFunction oracle_g(int sigma, std::uint64_t cap = kDefaultEnumerationCap);

inline constexpr int kA191386Cap = 22;

// Number of ascents of length exactly 1 over all dispersed Dyck paths
// (Motzkin paths with flat steps only at height zero) of length n.
BigInt a191386(int n);

// The fifteen published values for n = 0..14.
const std::vector<long>& a191386_embedded();

// First 15 values indexed from n = 0; generated by path enumeration and
// checked against the embedded list.
struct A191386Table {
    std::vector<BigInt> values;

    static A191386Table generate(int n_max);
    bool matches_embedded_prefix() const;
};

// One-hole minimal-border counts against the conjectured A191386 multiples
// (k = n-1 and k = n-2 cases), plus the embedded-value reproduction rows.
Report check_conjecture_a191386(int n_max, int workers = 1,
                                std::uint64_t cap = kDefaultEnumerationCap);

// One-hole structural lemmas at even length n: forced border lengths and
// complementarity by hole position, and middle-pair insertions preserving the
// number of distinct borders for words with an odd number of them.
Report check_structural_lemmas(int n, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace aborders
