#include "schur/triple_rule.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace schur {

namespace {

long long parse_positive(std::string_view text, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v < 1)
        throw std::invalid_argument(std::string("TripleRule: ") + what +
                                    " must be a positive integer, got \"" +
                                    std::string(text) + "\"");
    if (v > 1'000'000'000)
        throw std::invalid_argument(std::string("TripleRule: ") + what + " too large");
    return v;
}

}  // namespace

TripleRule::TripleRule(long long num, long long den) : p(num), q(den) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("TripleRule: numerator and denominator must be >= 1");
    long long g = std::gcd(p, q);
    p /= g;
    q /= g;
}

std::string TripleRule::str() const {
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
}

TripleRule TripleRule::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return TripleRule(parse_positive(text, "numerator"), 1);
    return TripleRule(parse_positive(text.substr(0, slash), "numerator"),
                      parse_positive(text.substr(slash + 1), "denominator"));
}

}  // namespace schur
