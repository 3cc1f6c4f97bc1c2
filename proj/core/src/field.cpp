#include "tlss/field.hpp"

namespace tlss {
namespace {

// Deterministic for inputs below 2^32; anything larger gets 40 rounds of
// GMP's probabilistic test on top of its internal trial division.
bool is_prime(const mpz_class& n) {
    static const mpz_class kDeterministicBound = mpz_class(1) << 32;
    if (n < 2) {
        return false;
    }
    if (n < kDeterministicBound) {
        const unsigned long v = n.get_ui();
        if (v % 2 == 0) {
            return v == 2;
        }
        for (unsigned long d = 3; d * d <= v; d += 2) {
            if (v % d == 0) {
                return false;
            }
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

} // namespace

FieldPtr PrimeField::make(const mpz_class& modulus) {
    if (modulus < 3) {
        raise(Errc::modulus_too_small, "field modulus must be at least 3, got " + modulus.get_str());
    }
    if (!is_prime(modulus)) {
        raise(Errc::composite_modulus, modulus.get_str() + " is not prime");
    }
    return FieldPtr(new PrimeField(modulus));
}

FieldElement PrimeField::element(const mpz_class& value) const {
    mpz_class canon;
    mpz_mod(canon.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
    return FieldElement(std::move(canon), shared_from_this());
}

FieldElement PrimeField::zero() const { return element(mpz_class(0)); }
FieldElement PrimeField::one() const { return element(mpz_class(1)); }

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field()->same_as(*b.field())) {
        raise(Errc::field_mismatch,
              "operands live in F_" + a.modulus().get_str() + " and F_" + b.modulus().get_str());
    }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.field()->element(a.value_ + b.value_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.field()->element(a.value_ - b.value_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.field()->element(a.value_ * b.value_);
}

FieldElement FieldElement::operator-() const {
    return field_->element(-value_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) {
        raise(Errc::zero_inverse, "0 has no multiplicative inverse");
    }
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), modulus().get_mpz_t());
    return field_->element(inv);
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
    if (sgn(exponent) < 0) {
        raise(Errc::undefined_power, "negative exponent");
    }
    if (is_zero() && sgn(exponent) == 0) {
        raise(Errc::undefined_power, "0^0 is not defined");
    }
    mpz_class out;
    mpz_powm(out.get_mpz_t(), value_.get_mpz_t(), exponent.get_mpz_t(), modulus().get_mpz_t());
    return field_->element(out);
}

} // namespace tlss
