#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace rcparts {

/// Signed real stored as sign and natural log of magnitude, for quantities like
/// e^{pi sqrt(2n/3)} that overflow a double. log_abs is meaningless when sign == 0.
struct LogValue {
    int sign = 0;
    double log_abs = 0.0;

    static LogValue zero() { return {}; }

    static LogValue from_double(double x)
    {
        if (!std::isfinite(x))
            throw std::domain_error("LogValue::from_double: non-finite input");
        if (x == 0.0)
            return {};
        return {x > 0 ? 1 : -1, std::log(std::abs(x))};
    }

    static LogValue from_log(int sign, double log_abs) { return sign == 0 ? LogValue{} : LogValue{sign, log_abs}; }

    bool is_zero() const noexcept { return sign == 0; }

    /// May overflow to +-inf.
    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    LogValue operator-() const { return {-sign, log_abs}; }

    friend LogValue operator*(const LogValue& a, const LogValue& b)
    {
        if (a.sign == 0 || b.sign == 0)
            return {};
        return {a.sign * b.sign, a.log_abs + b.log_abs};
    }

    friend LogValue operator/(const LogValue& a, const LogValue& b)
    {
        if (b.sign == 0)
            throw std::domain_error("LogValue division by zero");
        if (a.sign == 0)
            return {};
        return {a.sign * b.sign, a.log_abs - b.log_abs};
    }

    friend LogValue operator+(const LogValue& a, const LogValue& b)
    {
        if (a.sign == 0)
            return b;
        if (b.sign == 0)
            return a;
        const LogValue& big = a.log_abs >= b.log_abs ? a : b;
        const LogValue& small = a.log_abs >= b.log_abs ? b : a;
        const double rel = std::exp(small.log_abs - big.log_abs);
        if (big.sign == small.sign)
            return {big.sign, big.log_abs + std::log1p(rel)};
        if (rel == 1.0)
            return {};
        return {big.sign, big.log_abs + std::log1p(-rel)};
    }

    friend LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }

    friend std::partial_ordering operator<=>(const LogValue& a, const LogValue& b)
    {
        if (a.sign != b.sign)
            return a.sign <=> b.sign;
        if (a.sign == 0)
            return std::partial_ordering::equivalent;
        return a.sign > 0 ? a.log_abs <=> b.log_abs : b.log_abs <=> a.log_abs;
    }
    friend bool operator==(const LogValue& a, const LogValue& b)
    {
        return a.sign == b.sign && (a.sign == 0 || a.log_abs == b.log_abs);
    }

    /// Scientific rendering, e.g. "-1.234567890e+352".
    std::string to_scientific(int digits = 10) const;
};

} // namespace rcparts
