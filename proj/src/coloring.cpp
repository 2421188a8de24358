#include "schur/coloring.hpp"

#include <stdexcept>

namespace schur {

namespace {

constexpr int kMaxN = 1'000'000;

int checked_n(long long n) {
    if (n < 1 || n > kMaxN)
        throw std::invalid_argument("Coloring: n must be in 1.." + std::to_string(kMaxN) +
                                    ", got " + std::to_string(n));
    return static_cast<int>(n);
}

}  // namespace

Coloring::Coloring(int n) : n_(checked_n(n)), words_((static_cast<std::size_t>(n_) + 63) / 64, 0) {}

Coloring::Coloring(int n, std::uint64_t mask) : Coloring(n) {
    if (n_ > 64) throw std::invalid_argument("Coloring: mask form needs n <= 64");
    if (n_ < 64) mask &= (std::uint64_t{1} << n_) - 1;
    words_[0] = mask;
}

void Coloring::set_blue(int i, bool b) {
    if (i < 1 || i > n_) throw std::out_of_range("Coloring: index out of range");
    std::uint64_t bit = std::uint64_t{1} << ((i - 1) & 63);
    if (b)
        words_[static_cast<std::size_t>(i - 1) >> 6] |= bit;
    else
        words_[static_cast<std::size_t>(i - 1) >> 6] &= ~bit;
}

Coloring Coloring::complement() const {
    Coloring out(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    int spare = n_ & 63;
    if (spare) out.words_.back() &= (std::uint64_t{1} << spare) - 1;
    return out;
}

std::string Coloring::word() const {
    std::string out(static_cast<std::size_t>(n_), 'R');
    for (int i = 1; i <= n_; ++i)
        if (blue(i)) out[static_cast<std::size_t>(i - 1)] = 'B';
    return out;
}

Coloring Coloring::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Coloring: empty word");
    // letters with optional run counts: "RBB" or "R1B2" or mixed
    std::string expanded;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != 'R' && c != 'B')
            throw std::invalid_argument("Coloring: expected R or B at position " +
                                        std::to_string(i));
        ++i;
        long long run = 1;
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            run = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                run = run * 10 + (text[i] - '0');
                if (run > kMaxN) throw std::invalid_argument("Coloring: run too long");
                ++i;
            }
            if (run == 0) throw std::invalid_argument("Coloring: zero run length");
        }
        if (static_cast<long long>(expanded.size()) + run > kMaxN)
            throw std::invalid_argument("Coloring: word too long");
        expanded.append(static_cast<std::size_t>(run), c);
    }
    Coloring out(static_cast<int>(expanded.size()));
    for (std::size_t k = 0; k < expanded.size(); ++k)
        if (expanded[k] == 'B') out.set_blue(static_cast<int>(k) + 1, true);
    return out;
}

}  // namespace schur
