#include "quiverhh/field.hpp"

#include "quiverhh/error.hpp"

namespace quiverhh {

bool is_prime(std::uint64_t n)
{
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof n, 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

Field Field::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 62))
        throw Error(ErrorCode::invalid_argument, "characteristic too large");
    if (!quiverhh::is_prime(p))
        throw Error(ErrorCode::invalid_argument, "characteristic " + std::to_string(p) + " is not prime");
    return Field(FieldKind::prime, p);
}

Rational Field::reduce(const Rational& x) const
{
    if (kind_ == FieldKind::rationals)
        return x;
    mpz_class p(static_cast<unsigned long>(characteristic_));
    mpz_class num = x.get_num() % p;
    mpz_class den = x.get_den() % p;
    if (den == 0)
        throw Error(ErrorCode::invalid_argument,
                    "denominator of " + x.get_str() + " is not invertible mod " + std::to_string(characteristic_));
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * den_inv) % p;
    if (r < 0)
        r += p;
    return Rational(r);
}

Rational Field::inv(const Rational& a) const
{
    if (a == 0)
        throw Error(ErrorCode::invalid_argument, "division by zero");
    if (kind_ == FieldKind::rationals)
        return Rational(1) / a;
    return reduce(Rational(1) / a);
}

std::string Field::name() const
{
    if (kind_ == FieldKind::rationals)
        return "Q";
    return "Fp " + std::to_string(characteristic_);
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
        throw Error(ErrorCode::parse_error, "bad coefficient '" + text + "'");
    r.canonicalize();
    return r;
}

} // namespace quiverhh
