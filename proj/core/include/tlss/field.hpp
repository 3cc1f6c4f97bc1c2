#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "tlss/errors.hpp"

namespace tlss {

class PrimeField;
class FieldElement;

using FieldPtr = std::shared_ptr<const PrimeField>;

/// Immutable prime-field context F_p. Elements carry a pointer back to their
/// field; mixing elements of fields with different moduli is rejected.
class PrimeField : public std::enable_shared_from_this<PrimeField> {
public:
    /// Validates p >= 3 and primality (deterministic trial division below
    /// 2^32, 40-round probabilistic test above).
    static FieldPtr make(const mpz_class& modulus);
    static FieldPtr make(std::uint64_t modulus) { return make(mpz_class(static_cast<unsigned long>(modulus))); }

    const mpz_class& modulus() const noexcept { return modulus_; }
    std::size_t bit_length() const noexcept { return mpz_sizeinbase(modulus_.get_mpz_t(), 2); }

    /// Canonical representative of value mod p, for any integer value.
    FieldElement element(const mpz_class& value) const;
    FieldElement element(std::int64_t value) const { return element(mpz_class(static_cast<long>(value))); }
    FieldElement zero() const;
    FieldElement one() const;

    bool same_as(const PrimeField& other) const noexcept { return modulus_ == other.modulus_; }

private:
    explicit PrimeField(mpz_class modulus) : modulus_(std::move(modulus)) {}

    mpz_class modulus_;
};

class FieldElement {
public:
    const mpz_class& value() const noexcept { return value_; }
    const FieldPtr& field() const noexcept { return field_; }
    const mpz_class& modulus() const noexcept { return field_->modulus(); }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    std::string str() const { return value_.get_str(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    /// Multiplicative inverse; x must be nonzero.
    FieldElement inverse() const;

    /// x^e by square-and-multiply; 0^0 is rejected.
    FieldElement pow(const mpz_class& exponent) const;
    FieldElement pow(std::uint64_t exponent) const { return pow(mpz_class(static_cast<unsigned long>(exponent))); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.value_ == b.value_ && a.field_->same_as(*b.field_);
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    friend class PrimeField;
    FieldElement(mpz_class value, FieldPtr field)
        : value_(std::move(value)), field_(std::move(field)) {}

    mpz_class value_;
    FieldPtr field_;
};

/// Raises FieldMismatch unless both elements live in fields with equal moduli.
void require_same_field(const FieldElement& a, const FieldElement& b);

} // namespace tlss
