#include "aborders/word.hpp"

#include <algorithm>
#include <cctype>

namespace aborders {

namespace {

int count_holes(const std::vector<std::int8_t>& symbols) {
    return static_cast<int>(std::count(symbols.begin(), symbols.end(),
                                       static_cast<std::int8_t>(kHole)));
}

}  // namespace

PartialWord::PartialWord(std::vector<std::int8_t> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet), holes_(count_holes(symbols_)) {
    for (std::int8_t s : symbols_) {
        if (s != kHole && (s < 0 || s >= alphabet_.sigma))
            throw std::invalid_argument("letter index out of alphabet range");
    }
}

PartialWord PartialWord::prefix(int k) const {
    if (k < 0 || k > size()) throw std::invalid_argument("prefix length out of range");
    return PartialWord(std::vector<std::int8_t>(symbols_.begin(), symbols_.begin() + k),
                       alphabet_);
}

PartialWord PartialWord::suffix(int k) const {
    if (k < 0 || k > size()) throw std::invalid_argument("suffix length out of range");
    return PartialWord(std::vector<std::int8_t>(symbols_.end() - k, symbols_.end()),
                       alphabet_);
}

PartialWord PartialWord::reversed() const {
    std::vector<std::int8_t> rev(symbols_.rbegin(), symbols_.rend());
    return PartialWord(std::move(rev), alphabet_);
}

PartialWord PartialWord::complemented() const {
    if (!binary()) throw std::domain_error("complement is defined for binary words");
    std::vector<std::int8_t> out(symbols_);
    for (std::int8_t& s : out)
        if (s != kHole) s = static_cast<std::int8_t>(1 - s);
    return PartialWord(std::move(out), alphabet_);
}

std::string PartialWord::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (std::int8_t s : symbols_) {
        if (s == kHole)
            out.push_back('.');
        else if (s < 10)
            out.push_back(static_cast<char>('0' + s));
        else
            out.push_back(static_cast<char>('a' + s - 10));
    }
    return out;
}

PartialWord parse_word(std::string_view text, int sigma) {
    if (sigma < 1) throw std::invalid_argument("alphabet size must be >= 1");
    if (text.empty()) throw std::invalid_argument("empty word text");

    bool has_digit = false, has_alpha = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') continue;
        if (c >= '0' && c <= '9')
            has_digit = true;
        else if (c >= 'a' && c <= 'z')
            has_alpha = true;
        else
            throw std::invalid_argument("invalid character '" + std::string(1, c) +
                                        "' at position " + std::to_string(i));
    }
    // With sigma <= 10 a digit and a letter cannot both name a letter index,
    // so mixed text is ambiguous and rejected; 'a'->0 only in pure-letter text.
    const bool letters_from_zero = sigma <= 10 && has_alpha;
    if (sigma <= 10 && has_digit && has_alpha)
        throw std::invalid_argument("mixed digit/letter word text");

    std::vector<std::int8_t> symbols;
    symbols.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            symbols.push_back(static_cast<std::int8_t>(kHole));
            continue;
        }
        int idx;
        if (c >= '0' && c <= '9')
            idx = c - '0';
        else
            idx = letters_from_zero ? c - 'a' : 10 + (c - 'a');
        if (idx >= sigma)
            throw std::invalid_argument("letter '" + std::string(1, c) + "' at position " +
                                        std::to_string(i) + " is outside the alphabet");
        symbols.push_back(static_cast<std::int8_t>(idx));
    }
    return PartialWord(std::move(symbols), Alphabet(sigma));
}

ParikhVector parikh(const PartialWord& w) {
    ParikhVector counts(static_cast<std::size_t>(w.sigma()), 0);
    for (int i = 0; i < w.size(); ++i)
        if (!w.is_hole(i)) ++counts[static_cast<std::size_t>(w[i])];
    return counts;
}

bool abelian_compatible(const PartialWord& u, const PartialWord& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("abelian_compatible requires equal lengths");
    if (u.sigma() != v.sigma())
        throw std::invalid_argument("abelian_compatible requires the same alphabet");
    const ParikhVector pu = parikh(u), pv = parikh(v);
    int diff = 0;
    for (std::size_t a = 0; a < pu.size(); ++a) diff += std::abs(pu[a] - pv[a]);
    return diff <= u.hole_count() + v.hole_count();
}

std::vector<PartialWord> completions(const PartialWord& w) {
    std::vector<int> hole_positions;
    for (int i = 0; i < w.size(); ++i)
        if (w.is_hole(i)) hole_positions.push_back(i);

    const int h = static_cast<int>(hole_positions.size());
    const int sigma = w.sigma();

    std::vector<PartialWord> out;
    std::vector<std::int8_t> fill(static_cast<std::size_t>(h), 0);
    std::vector<std::int8_t> symbols(w.symbols());
    // Odometer over the fill tuple, most significant digit first.
    while (true) {
        for (int i = 0; i < h; ++i)
            symbols[static_cast<std::size_t>(hole_positions[i])] = fill[i];
        out.emplace_back(symbols, w.alphabet());
        int pos = h - 1;
        while (pos >= 0 && fill[pos] == sigma - 1) fill[pos--] = 0;
        if (pos < 0) break;
        ++fill[pos];
    }
    return out;
}

}  // namespace aborders
