#include "tlss/poly.hpp"

#include <algorithm>

namespace tlss {

Polynomial::Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        raise(Errc::wrong_count, "polynomial needs at least one coefficient");
    }
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        require_same_field(coeffs_[0], coeffs_[i]);
    }
}

Polynomial Polynomial::random(const FieldElement& constant, std::size_t coeff_count,
                              RandomSource& rng) {
    if (coeff_count == 0) {
        raise(Errc::wrong_count, "coefficient count must be positive");
    }
    std::vector<FieldElement> coeffs;
    coeffs.reserve(coeff_count);
    coeffs.push_back(constant);
    for (std::size_t i = 1; i < coeff_count; ++i) {
        coeffs.push_back(rng.element(constant.field()));
    }
    return Polynomial(std::move(coeffs));
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
    require_same_field(coeffs_.front(), x);
    // Horner
    FieldElement acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::interpolate(std::span<const EvalPoint> points, std::size_t coeff_count) {
    if (coeff_count == 0 || points.size() != coeff_count) {
        raise(Errc::wrong_count, "interpolation needs exactly " + std::to_string(coeff_count) +
                                     " points, got " + std::to_string(points.size()));
    }
    const FieldPtr& field = points.front().x.field();
    for (const EvalPoint& pt : points) {
        require_same_field(points.front().x, pt.x);
        require_same_field(points.front().x, pt.y);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].x == points[j].x) {
                raise(Errc::duplicate_node, "node " + points[i].x.str() + " appears twice");
            }
        }
    }

    const std::size_t t = coeff_count;
    // Master product P(x) = prod_i (x - x_i), t+1 coefficients.
    std::vector<FieldElement> master(t + 1, field->zero());
    master[0] = field->one();
    std::size_t degree = 0;
    for (const EvalPoint& pt : points) {
        for (std::size_t i = degree + 1; i-- > 0;) {
            FieldElement shifted = (i > 0) ? master[i - 1] : field->zero();
            master[i] = shifted - master[i] * pt.x;
        }
        master[degree + 1] = field->one();
        ++degree;
    }

    std::vector<FieldElement> result(t, field->zero());
    std::vector<FieldElement> quotient(t, field->zero());
    for (const EvalPoint& pt : points) {
        // Synthetic division: quotient = P(x) / (x - x_i).
        FieldElement carry = master[t];
        for (std::size_t i = t; i-- > 0;) {
            quotient[i] = carry;
            carry = master[i] + carry * pt.x;
        }
        // Denominator prod_{j != i} (x_i - x_j) equals quotient(x_i).
        FieldElement denom = quotient[t - 1];
        for (std::size_t i = t - 1; i-- > 0;) {
            denom = denom * pt.x + quotient[i];
        }
        FieldElement scale = pt.y * denom.inverse();
        for (std::size_t i = 0; i < t; ++i) {
            result[i] = result[i] + scale * quotient[i];
        }
    }
    return Polynomial(std::move(result));
}

} // namespace tlss
