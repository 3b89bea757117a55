#pragma once

#include <istab/graph_matching.hpp>
#include <istab/model.hpp>

#include <string>
#include <vector>

namespace istab {

enum class RoleKind { AVertex, BVertex, Gadget, Sink };

/// What a player of a reduced game stands for. For AVertex and BVertex,
/// `index` is the vertex of the padded subdivision graph. For Gadget,
/// `index` is the 1-based gadget number and `layer` its position in a
/// cyclic triplet (0, 1, 2), or -1 for the single gadget players of the
/// marriage construction. Sink is the player who wants to stay alone.
struct Role {
    RoleKind kind = RoleKind::AVertex;
    int index = 0;
    int layer = -1;

    friend bool operator==(const Role &, const Role &) = default;
};

struct ReductionArtifact {
    Game game;
    /// roles[i] describes player i; roles[0] is unused.
    std::vector<Role> roles;
    /// Padded subdivision graph of the input; its parts have n vertices each.
    Graph padded;
    int n = 0;
    int k = 0;
    int r = 0;
};

/// Marriage game that has a Nash stable matching iff the padded subdivision
/// of `base` has a maximal matching of size at most k. Players: A-vertices,
/// then the sink (men); B-vertices, then n - k gadget players (women).
/// Throws std::invalid_argument unless 0 <= k <= n.
ReductionArtifact mmm_to_marriage_ns(const Graph & base, int k);

/// Roommate game that has an individually stable matching iff the padded
/// subdivision of `base` has a maximal matching of size at most k. Players:
/// A-vertices, B-vertices, then n - k cyclic triplets.
/// Throws std::invalid_argument unless 0 <= k <= n.
ReductionArtifact mmm_to_roommate_is(const Graph & base, int k);

/// Three players each preferring the next over the previous over being
/// alone. No individually stable matching exists.
Game cyclic_triplet();

/// `# role <player> <A|B> <vertex>`, `# role <player> X <gadget> <layer|->`,
/// `# role <player> Y` lines, plus a parameter line.
std::string format_role_map(const ReductionArtifact & artifact);

} // namespace istab
