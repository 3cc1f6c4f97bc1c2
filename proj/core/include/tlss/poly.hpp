#pragma once

#include <span>
#include <vector>

#include "tlss/field.hpp"
#include "tlss/rng.hpp"

namespace tlss {

/// A node/value pair (a_i, q(a_i)).
struct EvalPoint {
    FieldElement x;
    FieldElement y;
};

/// Dense univariate polynomial over a prime field. The coefficient count is
/// part of the contract: scheme polynomials always carry exactly t
/// coefficients, and trailing zeros are kept rather than trimmed, because
/// trimming would silently change the threshold.
class Polynomial {
public:
    explicit Polynomial(std::vector<FieldElement> coeffs);

    /// Given constant term plus coeff_count-1 uniformly random higher
    /// coefficients.
    static Polynomial random(const FieldElement& constant, std::size_t coeff_count,
                             RandomSource& rng);

    /// The unique polynomial with coeff_count coefficients through exactly
    /// coeff_count points with pairwise distinct nodes. Direct Lagrange basis
    /// accumulation, O(t^2) field operations.
    static Polynomial interpolate(std::span<const EvalPoint> points, std::size_t coeff_count);

    FieldElement evaluate(const FieldElement& x) const;

    std::size_t coeff_count() const noexcept { return coeffs_.size(); }
    const FieldElement& coeff(std::size_t i) const { return coeffs_.at(i); }
    const FieldElement& constant_term() const { return coeffs_.front(); }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    const FieldPtr& field() const noexcept { return coeffs_.front().field(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<FieldElement> coeffs_;
};

} // namespace tlss
