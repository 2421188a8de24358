#pragma once
// The coefficient a = p/q of the triple condition z = x + floor(a*y), kept
// as an exact rational so every floor is integer arithmetic.

#include <string>
#include <string_view>

namespace schur {

struct TripleRule {
    long long p = 1;  // numerator, >= 1
    long long q = 1;  // denominator, >= 1, gcd(p, q) == 1

    TripleRule() = default;
    TripleRule(long long num, long long den);

    // floor(a*y) for y >= 0, exact
    long long floor_ay(long long y) const { return p * y / q; }

    double value() const { return static_cast<double>(p) / static_cast<double>(q); }

    bool is(long long num, long long den) const { return p == num && q == den; }

    // "p" when q == 1, else "p/q"
    std::string str() const;

    // accepts "p" or "p/q" with positive integer parts
    static TripleRule parse(std::string_view text);

    bool operator==(const TripleRule&) const = default;
};

}  // namespace schur
