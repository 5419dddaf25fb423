#pragma once

#include <compare>
#include <string>

namespace uqgl21 {

/// Exact half-integer, stored as twice its value.  Weights J1, J2, J3 and
/// tower projections M, P, R, S all live here.
class HalfInt {
  public:
    constexpr HalfInt() : twice_(0) {}
    constexpr explicit HalfInt(long twice) : twice_(twice) {}

    static constexpr HalfInt whole(long n) { return HalfInt(2 * n); }

    constexpr long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Valid only when is_integer().
    constexpr long as_integer() const { return twice_ / 2; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice_); }
    friend constexpr HalfInt operator+(HalfInt a, long n) { return HalfInt(a.twice_ + 2 * n); }
    friend constexpr HalfInt operator-(HalfInt a, long n) { return HalfInt(a.twice_ - 2 * n); }
    friend constexpr HalfInt operator*(long n, HalfInt a) { return HalfInt(n * a.twice_); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    /// "3/2", "-1", "0": reduced p/2 form.
    std::string str() const;
    /// Inverse of str().  Accepts "p" and "p/2".  Throws ParseError.
    static HalfInt parse(const std::string& s);

  private:
    long twice_;
};

}  // namespace uqgl21
