#include "tlss/oneway.hpp"

#include "tlss/hash.hpp"

namespace tlss {

OneWayFunction OneWayFunction::mod_exp(const FieldElement& generator) {
    if (generator.is_zero()) {
        raise(Errc::zero_generator, "modexp generator must be a unit");
    }
    return OneWayFunction(Kind::mod_exp, generator.field(), generator);
}

OneWayFunction OneWayFunction::mod_square(FieldPtr field) {
    return OneWayFunction(Kind::mod_square, std::move(field), std::nullopt);
}

OneWayFunction OneWayFunction::sha256_to_field(FieldPtr field) {
    return OneWayFunction(Kind::sha256, std::move(field), std::nullopt);
}

OneWayFunction OneWayFunction::parse(std::string_view text, const FieldPtr& field) {
    if (text == "modsquare") {
        return mod_square(field);
    }
    if (text == "sha256") {
        return sha256_to_field(field);
    }
    if (text.starts_with("modexp:")) {
        const std::string digits(text.substr(7));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            raise(Errc::config_invalid, "bad modexp generator '" + digits + "'");
        }
        return mod_exp(field->element(mpz_class(digits)));
    }
    raise(Errc::config_invalid,
          "unknown one-way function '" + std::string(text) + "' (want modexp:<g>, modsquare or sha256)");
}

std::string OneWayFunction::name() const {
    switch (kind_) {
    case Kind::mod_exp: return "modexp:" + generator_->str();
    case Kind::mod_square: return "modsquare";
    case Kind::sha256: return "sha256";
    }
    return "?";
}

FieldElement OneWayFunction::apply(const FieldElement& x) const {
    if (!x.field()->same_as(*field_)) {
        raise(Errc::field_mismatch, "input lives in F_" + x.modulus().get_str() +
                                        ", function over F_" + field_->modulus().get_str());
    }
    switch (kind_) {
    case Kind::mod_exp:
        // Exponent is the canonical integer representative of x.
        return generator_->pow(x.value());
    case Kind::mod_square:
        return x * x;
    case Kind::sha256: {
        // Digest of the minimal big-endian encoding, reduced mod p. The
        // reduction is slightly biased toward small residues; tolerable at
        // desk scale and documented here.
        const auto bytes = to_bytes_be(x.value());
        return field_->element(from_bytes_be(sha256(bytes)));
    }
    }
    raise(Errc::config_invalid, "corrupt one-way function kind");
}

Polynomial OneWayFunction::lift(const Polynomial& poly) const {
    std::vector<FieldElement> out;
    out.reserve(poly.coeff_count());
    for (const FieldElement& c : poly.coeffs()) {
        out.push_back(apply(c));
    }
    return Polynomial(std::move(out));
}

} // namespace tlss
