#pragma once

#include <istab/matching.hpp>
#include <istab/model.hpp>

#include <optional>
#include <string_view>

namespace istab {

enum class Concept { IR, NS, IS, CNS, CIS, Core, StrictCore };

/// Short upper-case name: IR, NS, IS, CNS, CIS, CORE, STRICT_CORE.
std::string_view name(Concept c);
/// Accepts the command-line spellings (`ir`, `ns`, `is`, `cns`, `cis`, `core`, `strict-core`), case-insensitive.
std::optional<Concept> parse_concept(std::string_view text);

/// Target of a move into the empty coalition.
inline constexpr PlayerId kAlone = 0;

/// A single-player move that certifies instability: `mover` leaves its
/// coalition and joins the singleton `{target}` (or stays alone).
struct DeviationWitness {
    PlayerId mover = 0;
    PlayerId target = kAlone;
    Concept stability = Concept::NS;

    friend bool operator==(const DeviationWitness &, const DeviationWitness &) = default;
};

/// A pair that blocks core (both strictly better off) or strict core (both
/// weakly, one strictly). `first == second` is the degenerate block of a
/// player who prefers being alone.
struct PairBlockWitness {
    PlayerId first = 0;
    PlayerId second = 0;

    bool degenerate() const { return first == second; }
    friend bool operator==(const PairBlockWitness &, const PairBlockWitness &) = default;
};

bool is_individually_rational(const Game & game, const Matching & matching);
/// Smallest player whose partner is worse than being alone.
std::optional<PlayerId> find_ir_violation(const Game & game, const Matching & matching);

/// Finds a profitable single-player move allowed under `stability`, which
/// must be NS, IS, CNS or CIS. Moves only go to singletons or to being
/// alone; joining a pair would form a coalition of three, which nobody
/// accepts. Consent: IS needs the joined player not to be worse off, CNS the
/// abandoned partner, CIS both.
///
/// The witness is deterministic: smallest mover, then the mover's most
/// preferred target, ties broken by target id with "alone" first.
std::optional<DeviationWitness> find_deviation(const Game & game, const Matching & matching, Concept stability);

/// Core (strict == false) or strict-core (strict == true) blocking pair.
/// Individual-rationality violations are reported first, as degenerate blocks.
std::optional<PairBlockWitness> find_pair_block(const Game & game, const Matching & matching, bool strict);

bool is_stable(const Game & game, const Matching & matching, Concept stability);

/// True iff replaying `witness` strictly improves the mover and the consent
/// conditions of the witness's concept hold.
bool is_valid_deviation(const Game & game, const Matching & matching, const DeviationWitness & witness);

/// The matching after the mover leaves its partner and joins the target.
Matching apply_deviation(const Matching & matching, const DeviationWitness & witness);

} // namespace istab
