#pragma once

#include <stdexcept>
#include <string>

namespace tlss {

/// Machine-readable failure kinds raised by the library.
enum class Errc {
    composite_modulus,
    modulus_too_small,
    field_mismatch,
    zero_inverse,
    undefined_power,
    duplicate_node,
    wrong_count,
    threshold_invalid,
    duplicate_key,
    zero_key,
    zero_generator,
    too_many_participants,
    unknown_key,
    length_mismatch,
    message_bits_invalid,
    threshold_too_large,
    mode_unavailable,
    config_invalid,
    no_transactions,
    committee_collapse,
    field_too_small,
    unbalanced_amounts,
    empty_block,
    difficulty_too_high,
    orphan_parent,
    invalid_pow,
    merkle_mismatch,
    bad_height,
    corrupt_store,
    self_check_failed,
    unknown_example,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace tlss
