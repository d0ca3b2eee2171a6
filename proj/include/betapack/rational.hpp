#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace betapack {

/// Exact nonnegative fraction, always kept in lowest terms with den >= 1.
///
/// Comparison is by cross-multiplication in 128-bit arithmetic, so no
/// rounding ever enters a decision. Parsing accepts only "p/q" or a bare
/// integer; decimal notation is rejected.
class Rational {
public:
    using value_type = std::uint64_t;

    constexpr Rational() noexcept = default;
    Rational(value_type num, value_type den = 1);

    static Rational parse(std::string_view text);

    [[nodiscard]] constexpr value_type num() const noexcept { return num_; }
    [[nodiscard]] constexpr value_type den() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
    // 0 < r <= 1, the admissible range for beta and alpha.
    [[nodiscard]] constexpr bool in_unit_interval() const noexcept { return num_ > 0 && num_ <= den_; }

    // floor(r * m) and ceil(r * m), computed as integer division.
    [[nodiscard]] value_type floor_times(value_type m) const;
    [[nodiscard]] value_type ceil_times(value_type m) const;

    [[nodiscard]] std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, value_type k);

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
        const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept = default;

private:
    value_type num_ = 0;
    value_type den_ = 1;
};

Rational midpoint(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace betapack
