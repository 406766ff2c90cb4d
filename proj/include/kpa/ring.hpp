#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "kpa/errors.hpp"

namespace kpa {

using Integer = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

/// A commutative unital coefficient ring with exact arithmetic. Elements are
/// carried as rationals; integral rings keep them integral and the modular
/// rings keep them reduced into [0, m).
class Ring {
public:
    enum class Kind { Integers, Rationals, IntegersMod };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    static Ring rationals() { return Ring(Kind::Rationals, 0); }
    static Ring integers_mod(const Integer& m) {
        if (m < 2) throw Error("modulus must be at least 2");
        return Ring(Kind::IntegersMod, m);
    }

    Kind kind() const noexcept { return kind_; }
    const Integer& modulus() const noexcept { return modulus_; }

    bool is_field() const {
        if (kind_ == Kind::Rationals) return true;
        if (kind_ == Kind::Integers) return false;
        if (modulus_ < 4) return true;
        if (modulus_ % 2 == 0) return false;
        for (Integer d = 3; d * d <= modulus_; d += 2)
            if (modulus_ % d == 0) return false;
        return true;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::Integers: return "Z";
            case Kind::Rationals: return "Q";
            case Kind::IntegersMod: return "Zmod:" + modulus_.str();
        }
        return "?";
    }

    /// Canonical representative; throws when the value is not in the ring.
    Scalar normalize(const Scalar& x) const {
        if (kind_ == Kind::Rationals) return x;
        if (denominator(x) != 1) throw RingMismatchError("non-integral value in " + name());
        if (kind_ == Kind::Integers) return x;
        Integer n = numerator(x) % modulus_;
        if (n < 0) n += modulus_;
        return Scalar(n);
    }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return normalize(Scalar(1)); }
    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar negate(const Scalar& a) const { return normalize(-a); }
    Scalar multiply(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    bool is_zero(const Scalar& a) const { return normalize(a) == 0; }
    bool equal(const Scalar& a, const Scalar& b) const { return normalize(a) == normalize(b); }

    /// Membership in the ideal (m) of the integers.
    static bool in_integer_ideal(const Scalar& a, const Integer& m) {
        if (denominator(a) != 1) return false;
        if (m == 0) return numerator(a) == 0;
        return numerator(a) % m == 0;
    }

    friend bool operator==(const Ring& a, const Ring& b) { return a.kind_ == b.kind_ && a.modulus_ == b.modulus_; }

private:
    Ring(Kind k, const Integer& m) : kind_(k), modulus_(m) {}
    Kind kind_;
    Integer modulus_;
};

/// "Q", "Z", or "Zmod:<m>".
inline Ring parse_ring(const std::string& text) {
    if (text == "Q") return Ring::rationals();
    if (text == "Z") return Ring::integers();
    const std::string prefix = "Zmod:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string digits = text.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad modulus in ring '" + text + "'");
        return Ring::integers_mod(Integer(digits));
    }
    throw ParseError("unknown ring '" + text + "' (expected Q, Z or Zmod:<m>)");
}

inline std::string scalar_str(const Scalar& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace kpa
