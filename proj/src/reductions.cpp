#include <istab/reductions.hpp>

#include <sstream>
#include <stdexcept>

namespace istab {

namespace {

struct Layout {
    PaddedGraph padded;
    std::vector<Vertex> a, b;
    int n = 0;
};

Layout prepare(const Graph & base, int k)
{
    Layout layout{pad_bipartition(subdivision_graph(base)), {}, {}, 0};
    layout.a = layout.padded.graph.part(Part::A);
    layout.b = layout.padded.graph.part(Part::B);
    layout.n = static_cast<int>(layout.a.size());
    if (k < 0 || k > layout.n)
        throw std::invalid_argument("k must lie in [0, " + std::to_string(layout.n) + "]");
    return layout;
}

std::vector<PlayerId> players_of(const std::vector<Vertex> & vertices, const std::vector<PlayerId> & id_of_vertex)
{
    std::vector<PlayerId> ids;
    for (Vertex v : vertices)
        ids.push_back(id_of_vertex[static_cast<std::size_t>(v)]);
    return ids;
}

} // namespace

ReductionArtifact mmm_to_marriage_ns(const Graph & base, int k)
{
    Layout layout = prepare(base, k);
    const int n = layout.n;
    const int gadgets = n - k;
    const Graph & g = layout.padded.graph;

    // Men: A (1..n), sink (n+1). Women: B (n+2..2n+1), gadgets after.
    std::vector<PlayerId> id_of_vertex(static_cast<std::size_t>(g.vertex_count()));
    std::vector<Role> roles(static_cast<std::size_t>(2 * n + 2 + gadgets));
    for (int i = 0; i < n; ++i) {
        PlayerId pa = i + 1, pb = n + 2 + i;
        id_of_vertex[static_cast<std::size_t>(layout.a[static_cast<std::size_t>(i)])] = pa;
        id_of_vertex[static_cast<std::size_t>(layout.b[static_cast<std::size_t>(i)])] = pb;
        roles[static_cast<std::size_t>(pa)] = {RoleKind::AVertex, layout.a[static_cast<std::size_t>(i)], -1};
        roles[static_cast<std::size_t>(pb)] = {RoleKind::BVertex, layout.b[static_cast<std::size_t>(i)], -1};
    }
    const PlayerId sink = n + 1;
    roles[static_cast<std::size_t>(sink)] = {RoleKind::Sink, 0, -1};
    std::vector<PlayerId> gadget_ids;
    for (int x = 0; x < gadgets; ++x) {
        PlayerId id = 2 * n + 2 + x;
        gadget_ids.push_back(id);
        roles[static_cast<std::size_t>(id)] = {RoleKind::Gadget, x + 1, -1};
    }
    const std::vector<PlayerId> a_ids = players_of(layout.a, id_of_vertex);

    std::vector<PreferenceList> profile;
    for (Vertex v : layout.a) {
        std::vector<std::vector<PlayerId>> tiers;
        if (!g.neighbors(v).empty())
            tiers.push_back(players_of(g.neighbors(v), id_of_vertex));
        if (!gadget_ids.empty())
            tiers.push_back(gadget_ids);
        profile.emplace_back(id_of_vertex[static_cast<std::size_t>(v)], std::move(tiers));
    }
    profile.emplace_back(sink, std::vector<std::vector<PlayerId>>{});
    for (Vertex v : layout.b) {
        std::vector<std::vector<PlayerId>> tiers;
        if (!g.neighbors(v).empty())
            tiers.push_back(players_of(g.neighbors(v), id_of_vertex));
        profile.emplace_back(id_of_vertex[static_cast<std::size_t>(v)], std::move(tiers));
    }
    for (PlayerId x : gadget_ids) {
        std::vector<PlayerId> top = a_ids;
        top.push_back(sink);
        profile.emplace_back(x, std::vector<std::vector<PlayerId>>{top});
    }

    return {Game::marriage(n + 1, n + gadgets, std::move(profile)), std::move(roles), g, n, k, layout.padded.r};
}

ReductionArtifact mmm_to_roommate_is(const Graph & base, int k)
{
    Layout layout = prepare(base, k);
    const int n = layout.n;
    const int triplets = n - k;
    const Graph & g = layout.padded.graph;

    std::vector<PlayerId> id_of_vertex(static_cast<std::size_t>(g.vertex_count()));
    std::vector<Role> roles(static_cast<std::size_t>(2 * n + 3 * triplets + 1));
    for (int i = 0; i < n; ++i) {
        PlayerId pa = i + 1, pb = n + 1 + i;
        id_of_vertex[static_cast<std::size_t>(layout.a[static_cast<std::size_t>(i)])] = pa;
        id_of_vertex[static_cast<std::size_t>(layout.b[static_cast<std::size_t>(i)])] = pb;
        roles[static_cast<std::size_t>(pa)] = {RoleKind::AVertex, layout.a[static_cast<std::size_t>(i)], -1};
        roles[static_cast<std::size_t>(pb)] = {RoleKind::BVertex, layout.b[static_cast<std::size_t>(i)], -1};
    }
    auto gadget = [n](int t, int layer) { return 2 * n + 3 * t + ((layer % 3 + 3) % 3) + 1; };
    std::vector<PlayerId> gadget_ids;
    for (int t = 0; t < triplets; ++t)
        for (int layer = 0; layer < 3; ++layer) {
            gadget_ids.push_back(gadget(t, layer));
            roles[static_cast<std::size_t>(gadget(t, layer))] = {RoleKind::Gadget, t + 1, layer};
        }
    const std::vector<PlayerId> a_ids = players_of(layout.a, id_of_vertex);

    std::vector<PreferenceList> profile;
    for (Vertex v : layout.a) {
        std::vector<std::vector<PlayerId>> tiers;
        if (!g.neighbors(v).empty())
            tiers.push_back(players_of(g.neighbors(v), id_of_vertex));
        if (!gadget_ids.empty())
            tiers.push_back(gadget_ids);
        profile.emplace_back(id_of_vertex[static_cast<std::size_t>(v)], std::move(tiers));
    }
    for (Vertex v : layout.b) {
        std::vector<std::vector<PlayerId>> tiers;
        if (!g.neighbors(v).empty())
            tiers.push_back(players_of(g.neighbors(v), id_of_vertex));
        profile.emplace_back(id_of_vertex[static_cast<std::size_t>(v)], std::move(tiers));
    }
    for (int t = 0; t < triplets; ++t)
        for (int layer = 0; layer < 3; ++layer) {
            std::vector<PlayerId> top = a_ids;
            top.push_back(gadget(t, layer + 1));
            profile.emplace_back(gadget(t, layer), std::vector<std::vector<PlayerId>>{top, {gadget(t, layer - 1)}});
        }

    return {Game::roommate(std::move(profile)), std::move(roles), g, n, k, layout.padded.r};
}

Game cyclic_triplet()
{
    return Game::roommate({
        PreferenceList(1, {{2}, {3}}),
        PreferenceList(2, {{3}, {1}}),
        PreferenceList(3, {{1}, {2}}),
    });
}

std::string format_role_map(const ReductionArtifact & artifact)
{
    std::ostringstream out;
    out << "# n=" << artifact.n << " k=" << artifact.k << " r=" << artifact.r << '\n';
    for (std::size_t i = 1; i < artifact.roles.size(); ++i) {
        const Role & role = artifact.roles[i];
        out << "# role " << i << ' ';
        switch (role.kind) {
        case RoleKind::AVertex: out << "A " << role.index + 1; break;
        case RoleKind::BVertex: out << "B " << role.index + 1; break;
        case RoleKind::Gadget:
            out << "X " << role.index << ' ';
            if (role.layer < 0)
                out << '-';
            else
                out << role.layer;
            break;
        case RoleKind::Sink: out << 'Y'; break;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace istab
