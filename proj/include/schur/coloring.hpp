#pragma once
// 2-colorings of {1..n} as packed bit vectors. Bit i-1 holds the color of
// the integer i, 0 = R and 1 = B. The text form is a word over {R, B};
// parsing also accepts run-length counts, so "R4B6R1" is "RRRRBBBBBBR".

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int n);            // all red
    Coloring(int n, std::uint64_t mask); // low n bits of mask, needs n <= 64

    static Coloring parse(std::string_view text);

    int n() const { return n_; }

    bool blue(int i) const {  // i in 1..n
        return (words_[static_cast<std::size_t>(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
    }

    void set_blue(int i, bool b);

    Coloring complement() const;

    std::string word() const;

    bool operator==(const Coloring&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace schur
