#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tlss/field.hpp"
#include "tlss/poly.hpp"

namespace tlss {

/// One-way function H: F_p -> F_p, applied coefficient-wise to map the secret
/// polynomial f to the honesty-check polynomial h.
///
/// Variants: modular exponentiation x -> g^x, squaring x -> x^2, and a
/// SHA-256 based map. Squaring is kept only because it makes a convenient
/// worked example at desk scale; square roots mod p are easy to compute, so
/// it provides no one-wayness. Prefer "sha256" for anything that matters.
class OneWayFunction {
public:
    enum class Kind { mod_exp, mod_square, sha256 };

    static OneWayFunction mod_exp(const FieldElement& generator);
    static OneWayFunction mod_square(FieldPtr field);
    static OneWayFunction sha256_to_field(FieldPtr field);

    /// Accepts "modexp:<g>", "modsquare" or "sha256".
    static OneWayFunction parse(std::string_view text, const FieldPtr& field);

    Kind kind() const noexcept { return kind_; }
    std::string name() const;
    const FieldPtr& field() const noexcept { return field_; }

    FieldElement apply(const FieldElement& x) const;

    /// Coefficient-wise application; output has the same coefficient count.
    Polynomial lift(const Polynomial& poly) const;

private:
    OneWayFunction(Kind kind, FieldPtr field, std::optional<FieldElement> generator)
        : kind_(kind), field_(std::move(field)), generator_(std::move(generator)) {}

    Kind kind_;
    FieldPtr field_;
    std::optional<FieldElement> generator_;
};

} // namespace tlss
