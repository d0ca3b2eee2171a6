#include "betapack/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "betapack/error.hpp"

namespace betapack {

namespace {

Rational::value_type parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw InputError("empty number in fraction '" + std::string(whole) + "'");
    Rational::value_type out = 0;
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, out);
    if (ec == std::errc::result_out_of_range) throw InputError("fraction '" + std::string(whole) + "' is too large");
    if (ec != std::errc{} || ptr != end) {
        std::string msg = "malformed fraction '" + std::string(whole) + "'";
        if (whole.find('.') != std::string_view::npos) msg += "; decimals are not accepted, write e.g. 1/2 instead of 0.5";
        else msg += "; expected p/q or an integer";
        throw InputError(msg);
    }
    return out;
}

Rational::value_type checked_mul(Rational::value_type a, Rational::value_type b) {
    Rational::value_type out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw InputError("rational arithmetic overflow");
    return out;
}

}  // namespace

Rational::Rational(value_type num, value_type den) {
    if (den == 0) throw InputError("zero denominator");
    const auto g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text), 1);
    const auto den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash), text), den);
}

Rational::value_type Rational::floor_times(value_type m) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(num_) * m / den_);
}

Rational::value_type Rational::ceil_times(value_type m) const {
    const auto p = static_cast<unsigned __int128>(num_) * m;
    return static_cast<value_type>((p + den_ - 1) / den_);
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational operator+(const Rational& a, const Rational& b) {
    const auto g = std::gcd(a.den_, b.den_);
    const auto lhs = checked_mul(a.num_, b.den_ / g);
    const auto rhs = checked_mul(b.num_, a.den_ / g);
    Rational::value_type sum = 0;
    if (__builtin_add_overflow(lhs, rhs, &sum)) throw InputError("rational arithmetic overflow");
    return Rational(sum, checked_mul(a.den_ / g, b.den_));
}

Rational operator/(const Rational& a, Rational::value_type k) {
    if (k == 0) throw InputError("division by zero");
    const auto g = std::gcd(a.num_, k);
    return Rational(a.num_ / g, checked_mul(a.den_, k / g));
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.num() << '/' << r.den(); }

}  // namespace betapack
