#include <holeforge/subgraph.hpp>

namespace holeforge {

namespace {
    struct EmbeddingSearch
    {
        const Graph & h;
        const Graph & g;
        int k, n;
        std::vector<Vertex> image;
        VertexSet used;

        EmbeddingSearch(const Graph & pattern, const Graph & host) :
            h(pattern), g(host), k(pattern.vertex_count()), n(host.vertex_count()), used(host.vertex_count())
        {
        }

        auto feasible_for(Vertex p) const -> VertexSet
        {
            auto out = g.vertices() - used;
            for (Vertex q = 0; q < p; ++q) {
                auto & nb = g.neighbours(image[q]);
                if (h.adjacent(p, q))
                    out &= nb;
                else
                    out -= nb;
            }
            auto deg = h.degree(p), co_deg = k - 1 - deg;
            for (auto v : VertexSet(out)) {
                if (g.degree(v) < deg || n - 1 - g.degree(v) < co_deg)
                    out.erase(v);
            }
            return out;
        }

        auto extend(Vertex p) -> bool
        {
            if (p == k)
                return true;
            for (auto v : feasible_for(p)) {
                image.push_back(v);
                used.insert(v);
                if (extend(p + 1))
                    return true;
                used.erase(v);
                image.pop_back();
            }
            return false;
        }
    };
}

auto is_induced_subgraph(const Graph & h, const Graph & g) -> std::optional<Embedding>
{
    if (h.vertex_count() > g.vertex_count())
        return std::nullopt;
    if (h.vertex_count() == g.vertex_count() && h.edge_count() != g.edge_count())
        return std::nullopt;
    EmbeddingSearch search(h, g);
    if (! search.extend(0))
        return std::nullopt;
    return Embedding{std::move(search.image)};
}

auto are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && is_induced_subgraph(a, b).has_value();
}

} // namespace holeforge
