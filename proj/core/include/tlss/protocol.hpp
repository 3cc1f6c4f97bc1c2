#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tlss/mss.hpp"
#include "tlss/sss.hpp"

namespace tlss {

enum class Role { dealer, system, participant, node };

struct ActorId {
    Role role = Role::system;
    std::size_t index = 0;

    static ActorId dealer(std::size_t i = 0) { return {Role::dealer, i}; }
    static ActorId system() { return {Role::system, 0}; }
    static ActorId participant(std::size_t i) { return {Role::participant, i}; }
    static ActorId node(std::size_t i) { return {Role::node, i}; }

    friend bool operator==(const ActorId&, const ActorId&) = default;
};

std::string to_string(const ActorId& id);

enum class PayloadType {
    h_share,      // (a_i, h(a_i)), system->participant on distribution, participant->system on submit
    h_claim,      // recovered level-1 constant, first submitter -> system
    f_release,    // accepted verdict; broadcast naming the released keys
    f_share,      // (a_i, f(a_i)), system -> released participant
    public_value, // s~ broadcast (multisecret sessions)
    reject,       // refused verdict; reason only in the private view
    block_proposal,
    attestation,
};

const char* to_string(PayloadType type) noexcept;

struct Message {
    std::size_t tick = 0;
    ActorId from;
    std::optional<ActorId> to; // nullopt = broadcast
    PayloadType type = PayloadType::h_share;
    std::optional<FieldElement> key;
    std::optional<FieldElement> value;
    std::vector<FieldElement> keys; // h_claim: recovery subset; f_release: released keys
    std::string note;               // reject reason, attestation/block digests
};

/// Append-only message log plus coarse per-tick actor state snapshots.
/// Renders as line-delimited JSON with a fixed key order. The public view
/// shows share recipients only as anonymity aliases and hides reject
/// reasons; the private view resolves aliases and keeps everything.
class Transcript {
public:
    enum class View { public_view, private_view };

    void append(Message message);
    void snapshot(std::size_t tick, std::string system_state,
                  std::map<std::size_t, std::string> participant_states);
    void set_alias(std::size_t participant_index, std::string token);

    const std::vector<Message>& messages() const noexcept { return messages_; }
    const std::map<std::size_t, std::string>& aliases() const noexcept { return aliases_; }

    std::string render(View view) const;

private:
    struct Snapshot {
        std::size_t tick;
        std::string system_state;
        std::map<std::size_t, std::string> participant_states;
    };

    std::string actor_label(const ActorId& id, View view) const;

    std::vector<Message> messages_;
    std::vector<Snapshot> snapshots_;
    std::map<std::size_t, std::string> aliases_;
    std::map<std::string, std::size_t> last_tick_by_sender_;
};

/// Per-participant scripted behavior, fixed before the session starts.
struct BehaviorProfile {
    enum class Kind { honest, corrupt_h_share, silent, late };

    Kind kind = Kind::honest;
    mpz_class corrupt_offset = 1; // added to the submitted h-share (corrupt_h_share)
    std::size_t delay_ticks = 0;  // extra submission delay (late)

    static BehaviorProfile honest() { return {}; }
    static BehaviorProfile corrupt(mpz_class offset) {
        return {Kind::corrupt_h_share, std::move(offset), 0};
    }
    static BehaviorProfile silent() { return {Kind::silent, 1, 0}; }
    static BehaviorProfile late(std::size_t delay) { return {Kind::late, 1, delay}; }
};

enum class AbortReason { below_threshold, level1_mismatch, timeout };

const char* to_string(AbortReason reason) noexcept;

struct SubmissionRecord {
    std::size_t participant;
    FieldElement key;
    FieldElement value;
    bool consistent; // matches the stored share record
    std::size_t arrival_tick;
};

struct SessionOutcome {
    bool recovered = false;
    std::optional<AbortReason> reason;
    std::vector<FieldElement> values;        // single: {s}; multi: the k message components
    std::optional<FieldElement> s_tilde;     // multi only
    std::vector<FieldElement> used_keys;     // level-1 recovery subset, arrival order
    std::vector<FieldElement> released_keys; // f-share recipients
    std::vector<SubmissionRecord> submissions;
    bool strict = false;
    std::size_t final_tick = 0;
    Transcript transcript;
};

struct SessionSetup {
    SchemeParams params;
    OneWayFunction oneway;
    std::variant<FieldElement, SecretVector> secret;
    std::vector<BehaviorProfile> profiles; // one per participant
    std::vector<std::size_t> active;       // participant indices taking part in recovery
    bool strict = true;
    std::size_t tau1 = 100; // tick budget for the recovery phase
    std::uint64_t seed = 0;
};

/// Runs setup -> level-1 distribution -> recovery attempt -> verify/release
/// -> level-2 recovery as a deterministic tick simulation. Identical
/// (seed, params, profiles) yield a byte-identical transcript.
SessionOutcome run_session(const SessionSetup& setup);

/// Participants whose submitted h-share differed from the stored record,
/// sorted. Only available when the session ran in strict verification mode.
std::vector<std::size_t> identify_cheaters(const SessionOutcome& outcome);

} // namespace tlss
