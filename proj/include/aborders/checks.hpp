#pragma once

#include <cstdint>

#include "aborders/oracle.hpp"
#include "aborders/report.hpp"

namespace aborders {

struct CheckOptions {
    int workers = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
};

// Minimal border and full spectrum from the naive per-length test, the
// linear-time scan, and the Dyckian forms of w^2 must coincide: binary total
// words up to n_max_total, binary partial words up to n_max_partial with at
// most h_max holes.
Report check_three_way_agreement(int n_max_total, int n_max_partial, int h_max,
                                 const CheckOptions& options = {});

// 2^(n-2k+1) C_(k-1) against enumerated minimal-border counts, plus the
// completeness row sum_k count(n,k) + unbordered(n) = 2^n.
Report check_minimal_total_counts(int n_max, const CheckOptions& options = {});

// Unbordered closed forms against enumeration for total words.
Report check_unbordered_counts(int n_max, const CheckOptions& options = {});

// Every enumerated word with at least one hole has a border.
Report check_no_unbordered_partial(int n_max, int h_max, const CheckOptions& options = {});

// Four-case m-distinct-borders formula against enumeration, all m.
Report check_m_border_counts(int n_max, const CheckOptions& options = {});

// g2(k, j) = 2 binom(k,j) C_(k-1) against enumeration over length-2k words.
Report check_g2_counts(int k_max, int j_cap, const CheckOptions& options = {});

// The partial-word theorem sum (with g2) equals the closed product form.
Report check_f_forms_identity(int n_max, int h_max);

// 4(3^(n/2) - 2^(n/2)) and the per-hole-position unique counts 2^i 3^(n/2-1-i)
// against enumeration, even n up to n_max.
Report check_one_hole_max_borders(int n_max, const CheckOptions& options = {});

// The four unique minimal-border-(n-1) closed forms by first-half content,
// plus the ends-with-11 / half-inequality structural claims.
Report check_unique_minimal_counts(int n_max, const CheckOptions& options = {});

// Spectrum contains n-1..n-h for every word with h holes.
Report check_at_least_h_borders(int n_max, int h_max, const CheckOptions& options = {});

// Narayana-Catalan identity (exact) and the peak-count interpretation via
// Dyck word enumeration.
Report check_narayana(int n_max_identity, int n_max_enum);

// Conjectured A191386 multiples, via oracle::check_conjecture_a191386.
Report check_conjecture(int n_max, const CheckOptions& options = {});

// Structural one-hole lemmas at each given even length.
Report check_structural(const std::vector<int>& lengths, const CheckOptions& options = {});

}  // namespace aborders
