#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aborders/borders.hpp"
#include "aborders/word.hpp"

namespace aborders {

// Position-by-position comparison of w against its reversal: '0' where the
// prefix side reads 0 against a 1, '1' where it reads 1 against a 0, '2'
// where both sides agree.
using YForm = std::string;
// The YForm with the '2's removed; possibly empty.
using ZForm = std::string;

// Equal zero/one counts and no prefix with more ones than zeros. The empty
// word is a Dyck word.
bool is_dyck_word(const ZForm& z);

// A Dyck word or the bitwise negation of one.
bool is_dyckian(const ZForm& z);

YForm y_form(const PartialWord& w, int k);
ZForm z_form(const PartialWord& w, int k);

struct DSetEntry {
    int k = 0;                          // border-length candidate, 1..n
    std::uint64_t completion_index = 0; // lexicographic index among completions of w^2
    ZForm zform;

    bool operator==(const DSetEntry&) const = default;
};

// All (k, i) with 1 <= k <= n and Z_k of the i-th completion of w^2 Dyckian,
// ordered by (k, completion_index).
std::vector<DSetEntry> d_set(const PartialWord& w);

// Minimal abelian border recovered from the Dyckian forms of the completions
// of w^2; k = n witnesses nothing (a border is shorter than the word).
std::optional<int> minimal_border_via_dyck(const PartialWord& w);

// Full spectrum along the same route: k is a border length iff some
// completion of w^2 has a Dyckian Z_k form, for k in 1..n-1.
BorderSpectrum border_spectrum_via_dyck(const PartialWord& w);

}  // namespace aborders
