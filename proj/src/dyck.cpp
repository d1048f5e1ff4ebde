#include "aborders/dyck.hpp"

#include <algorithm>

namespace aborders {

bool is_dyck_word(const ZForm& z) {
    int balance = 0;  // zeros minus ones
    for (char c : z) {
        balance += c == '0' ? 1 : -1;
        if (balance < 0) return false;
    }
    return balance == 0;
}

bool is_dyckian(const ZForm& z) {
    if (z.size() % 2 != 0) return false;
    ZForm negated(z);
    for (char& c : negated) c = c == '0' ? '1' : '0';
    return is_dyck_word(z) || is_dyck_word(negated);
}

namespace {

void require_total_binary(const PartialWord& w, const char* what) {
    if (!w.total()) throw std::invalid_argument(std::string(what) + ": word must be total");
    if (!w.binary()) throw std::invalid_argument(std::string(what) + ": word must be binary");
}

PartialWord squared(const PartialWord& w) {
    std::vector<std::int8_t> symbols(w.symbols());
    symbols.insert(symbols.end(), w.symbols().begin(), w.symbols().end());
    return PartialWord(std::move(symbols), w.alphabet());
}

}  // namespace

YForm y_form(const PartialWord& w, int k) {
    require_total_binary(w, "y_form");
    const int n = w.size();
    if (n < 2) throw std::invalid_argument("y_form: word length must be >= 2");
    if (k < 1 || k > n) throw std::invalid_argument("y_form: k out of range");
    YForm out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int front = w[i], back = w[n - 1 - i];
        if (front == back)
            out.push_back('2');
        else
            out.push_back(front == 0 ? '0' : '1');
    }
    return out;
}

ZForm z_form(const PartialWord& w, int k) {
    ZForm z = y_form(w, k);
    z.erase(std::remove(z.begin(), z.end(), '2'), z.end());
    return z;
}

std::vector<DSetEntry> d_set(const PartialWord& w) {
    const int n = w.size();
    if (n < 2) throw std::invalid_argument("d_set requires length >= 2");
    if (!w.binary()) throw std::invalid_argument("d_set is defined for binary words");
    if (w.hole_count() > 12)
        throw std::length_error("d_set: too many holes (4^h completions of w^2)");

    const std::vector<PartialWord> squares = completions(squared(w));
    std::vector<DSetEntry> entries;
    for (int k = 1; k <= n; ++k) {
        for (std::uint64_t i = 0; i < squares.size(); ++i) {
            ZForm z = z_form(squares[i], k);
            if (is_dyckian(z)) entries.push_back({k, i, std::move(z)});
        }
    }
    return entries;  // built in (k, completion_index) order
}

std::optional<int> minimal_border_via_dyck(const PartialWord& w) {
    const int n = w.size();
    if (n < 2) throw std::invalid_argument("minimal_border_via_dyck requires length >= 2");
    if (!w.binary())
        throw std::invalid_argument("minimal_border_via_dyck is defined for binary words");

    const std::vector<PartialWord> squares = completions(squared(w));
    // k = n is excluded: every completion pair with equal Parikh vectors makes
    // Z_n Dyckian, but a border of the full length is not a border.
    for (int k = 1; k <= n - 1; ++k)
        for (const PartialWord& sq : squares)
            if (is_dyckian(z_form(sq, k))) return k;
    return std::nullopt;
}

BorderSpectrum border_spectrum_via_dyck(const PartialWord& w) {
    const int n = w.size();
    if (n < 2) throw std::invalid_argument("border_spectrum_via_dyck requires length >= 2");
    if (!w.binary())
        throw std::invalid_argument("border_spectrum_via_dyck is defined for binary words");

    const std::vector<PartialWord> squares = completions(squared(w));
    BorderSpectrum spectrum;
    spectrum.word_length = n;
    for (int k = 1; k <= n - 1; ++k)
        for (const PartialWord& sq : squares)
            if (is_dyckian(z_form(sq, k))) {
                spectrum.lengths.push_back(k);
                break;
            }
    return spectrum;
}

}  // namespace aborders
