#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace quiverhh {

using Rational = mpq_class;

enum class FieldKind { rationals, prime };

/// The ground field: Q, or F_p for a prime p.
///
/// Scalars are carried as `Rational` everywhere. Over F_p every stored scalar
/// is kept as its canonical residue in [0, p), so equality and zero tests are
/// plain rational comparisons.
class Field {
public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }
    /// Throws Error(invalid_argument) unless p is prime.
    static Field prime(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t characteristic() const noexcept { return characteristic_; }
    bool is_prime() const noexcept { return kind_ == FieldKind::prime; }

    /// Maps a rational to its representative in this field. Over F_p the
    /// denominator must be invertible mod p.
    Rational reduce(const Rational& x) const;

    Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
    Rational neg(const Rational& a) const { return reduce(-a); }
    Rational inv(const Rational& a) const;

    /// "Q" or "Fp <p>", the spelling used by the .quiver format.
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(FieldKind kind, std::uint64_t characteristic)
        : kind_(kind), characteristic_(characteristic) {}

    FieldKind kind_;
    std::uint64_t characteristic_;
};

bool is_prime(std::uint64_t n);

/// Parses "1", "-3", "2/3" exactly.
Rational parse_rational(const std::string& text);

} // namespace quiverhh
