#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tlss/field.hpp"
#include "tlss/oneway.hpp"
#include "tlss/poly.hpp"
#include "tlss/rng.hpp"

namespace tlss {

/// Public context of a (t, m) session: field, threshold, and the pairwise
/// distinct nonzero participant public keys a_1..a_m.
struct SchemeParams {
    FieldPtr field;
    std::size_t threshold_t = 0;
    std::size_t participant_count_m = 0;
    std::vector<FieldElement> public_keys;

    static SchemeParams make(FieldPtr field, std::size_t threshold_t,
                             std::size_t participant_count_m,
                             std::vector<FieldElement> public_keys);

    std::optional<std::size_t> key_index(const FieldElement& key) const;
};

struct SharePolynomials {
    Polynomial f; // constant term is the secret (or alpha_1 in the multisecret case)
    Polynomial h; // coefficient-wise one-way image of f
};

/// A (public key, share value) wire pair.
struct SharePair {
    FieldElement key;
    FieldElement value;
};

struct ShareRecord {
    FieldElement public_key;
    FieldElement h_share;
    FieldElement f_share;
    bool f_released = false;
};

/// Two-level session state: h-shares go out first, f-shares are gated on a
/// correct level-1 recovery of h's constant term. Mutation is confined to
/// verify_and_release and must stay single-owner; everything else is
/// read-only.
class SingleSecretSession {
public:
    /// Fresh f with random higher coefficients around the secret, h lifted
    /// through the one-way function.
    static SingleSecretSession generate(SchemeParams params, OneWayFunction oneway,
                                        const FieldElement& secret, RandomSource& rng);

    /// Session around a caller-supplied f (the multisecret scheme builds f
    /// from the alpha values, with no fresh randomness).
    static SingleSecretSession from_polynomials(SchemeParams params, OneWayFunction oneway,
                                                Polynomial f);

    const SchemeParams& params() const noexcept { return params_; }
    const OneWayFunction& oneway() const noexcept { return oneway_; }
    const SharePolynomials& polynomials() const noexcept { return polys_; }
    const std::vector<ShareRecord>& records() const noexcept { return records_; }

    /// H(s): the value a correct level-1 recovery must produce.
    const FieldElement& expected_level1() const { return polys_.h.constant_term(); }

    /// Level-1 distribution; exposes only h-shares, never f-shares.
    std::vector<SharePair> level1_shares(std::span<const FieldElement> keys) const;

    /// Strict-mode helper: does a submitted h-value match the stored record?
    bool level1_share_matches(const FieldElement& key, const FieldElement& submitted) const;

    struct Release {
        std::vector<SharePair> f_shares;
    };

    /// Gate: releases f-shares for every submitting key iff the claimed
    /// level-1 constant matches and at least t keys submitted. Rejected
    /// (nullopt) leaves the session unchanged.
    std::optional<Release> verify_and_release(const FieldElement& claimed,
                                              std::span<const FieldElement> submitting_keys);

private:
    SingleSecretSession(SchemeParams params, OneWayFunction oneway, Polynomial f);

    std::size_t require_key(const FieldElement& key) const;

    SchemeParams params_;
    OneWayFunction oneway_;
    SharePolynomials polys_;
    std::vector<ShareRecord> records_;
};

struct LevelOneRecovery {
    Polynomial h;
    FieldElement claimed; // constant term, submitted to the system for verification
};

/// Participants' side of level 1: Lagrange-recover h from exactly t points.
LevelOneRecovery recover_level1(std::span<const EvalPoint> points, std::size_t threshold_t);

/// Participants' side of level 2: recover f and return its constant term.
FieldElement recover_level2(std::span<const EvalPoint> points, std::size_t threshold_t);

} // namespace tlss
