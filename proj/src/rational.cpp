#include "vertexforge/rational.hpp"

#include <cctype>

namespace vertexforge {

Rational rat_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    std::size_t i = 0;
    auto scan_int = [&](const char* what) {
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0)
            throw std::invalid_argument(std::string("rational: missing ") + what + " in '" + text + "'");
        return text.substr(start, i - start);
    };
    std::string num = scan_int("numerator");
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = scan_int("denominator");
    }
    if (i != text.size())
        throw std::invalid_argument("rational: trailing characters in '" + text + "'");
    Rational r{mpz_class(num), mpz_class(den)};
    if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    Rational result(1);
    for (long j = 0; j < k; ++j) {
        result *= Rational(n - j);
        result /= Rational(j + 1);
    }
    return result;
}

}  // namespace vertexforge
