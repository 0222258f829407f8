#include "ramseylab/rational.hpp"

#include <ostream>

namespace ramseylab {

void Rational::normalise() {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw DomainError("Rational::parse: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0) return Rational(BigInt(text.substr(0, dot)));
    bool neg = !digits.empty() && digits[0] == '-';
    BigInt p(digits);
    BigInt q = 1;
    for (size_t i = 0; i < frac_len; ++i) q *= 10;
    (void)neg;
    return Rational(p, q);
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ramseylab
