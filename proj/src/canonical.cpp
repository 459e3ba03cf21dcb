#include <holeforge/canonical.hpp>
#include <holeforge/errors.hpp>
#include <holeforge/graph6.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace holeforge {

namespace {
    using Cells = std::vector<std::vector<Vertex>>;

    // Split cells by neighbour counts into each splitter until the partition is
    // equitable. Only counts decide the split and the order of the pieces, so
    // the result commutes with relabelling.
    void refine(const Graph & g, Cells & cells)
    {
        auto n = g.vertex_count();
        bool changed = true;
        std::vector<std::pair<int, Vertex>> keyed;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size(); ++s) {
                auto splitter = VertexSet::from_range(n, cells[s]);
                Cells next;
                next.reserve(cells.size() + 4);
                bool split = false;
                for (auto & cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    keyed.clear();
                    for (auto v : cell)
                        keyed.emplace_back(g.neighbours(v).intersection_size(splitter), v);
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first) {
                        next.push_back(cell);
                        continue;
                    }
                    split = true;
                    std::size_t i = 0;
                    while (i < keyed.size()) {
                        std::vector<Vertex> piece;
                        auto count = keyed[i].first;
                        for (; i < keyed.size() && keyed[i].first == count; ++i)
                            piece.push_back(keyed[i].second);
                        next.push_back(std::move(piece));
                    }
                }
                if (split) {
                    cells = std::move(next);
                    changed = true;
                }
            }
        }
    }

    struct Search
    {
        const Graph & g;
        int n;
        std::size_t words;

        std::vector<Vertex> path;
        bool have_first = false;
        std::vector<std::uint64_t> first_code, best_code;
        std::vector<Vertex> first_order, best_order, first_path, best_path;
        std::vector<std::vector<Vertex>> automorphisms;

        explicit Search(const Graph & graph) :
            g(graph), n(graph.vertex_count()), words((static_cast<std::size_t>(graph.vertex_count()) + 63) / 64)
        {
        }

        auto code_of(const std::vector<Vertex> & order) const -> std::vector<std::uint64_t>
        {
            std::vector<Vertex> position(n);
            for (int i = 0; i < n; ++i)
                position[order[i]] = i;
            std::vector<std::uint64_t> code(static_cast<std::size_t>(n) * words, 0);
            for (int i = 0; i < n; ++i)
                for (auto w : g.neighbours(order[i])) {
                    auto j = static_cast<std::size_t>(position[w]);
                    code[static_cast<std::size_t>(i) * words + words - 1 - j / 64] |= std::uint64_t{1} << (63 - j % 64);
                }
            return code;
        }

        static auto divergence(const std::vector<Vertex> & a, const std::vector<Vertex> & b) -> int
        {
            std::size_t d = 0;
            while (d < a.size() && d < b.size() && a[d] == b[d])
                ++d;
            return static_cast<int>(d);
        }

        void record(const std::vector<Vertex> & from, const std::vector<Vertex> & to)
        {
            std::vector<Vertex> gamma(n);
            for (int i = 0; i < n; ++i)
                gamma[from[i]] = to[i];
            automorphisms.push_back(std::move(gamma));
        }

        auto leaf(const Cells & cells) -> int
        {
            std::vector<Vertex> order(n);
            for (int i = 0; i < n; ++i)
                order[i] = cells[i][0];
            auto code = code_of(order);
            if (! have_first) {
                have_first = true;
                first_code = best_code = code;
                first_order = best_order = order;
                first_path = best_path = path;
                return -1;
            }
            if (code == first_code) {
                record(first_order, order);
                return divergence(path, first_path);
            }
            if (code > best_code) {
                best_code = std::move(code);
                best_order = order;
                best_path = path;
                return -1;
            }
            if (code == best_code) {
                record(best_order, order);
                return divergence(path, best_path);
            }
            return -1;
        }

        // Skip v when an automorphism fixing the current prefix maps an
        // already explored sibling onto it.
        auto equivalent_to_tried(Vertex v, const std::vector<Vertex> & tried) const -> bool
        {
            if (tried.empty() || automorphisms.empty())
                return false;
            std::vector<Vertex> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](Vertex x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            for (auto & gamma : automorphisms) {
                bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
                if (! fixes)
                    continue;
                for (int x = 0; x < n; ++x) {
                    auto a = find(x), b = find(gamma[x]);
                    if (a != b)
                        parent[a] = b;
                }
            }
            auto root = find(v);
            return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(t) == root; });
        }

        auto explore(Cells cells) -> int
        {
            refine(g, cells);
            if (static_cast<int>(cells.size()) == n)
                return leaf(cells);

            std::size_t target = 0;
            while (cells[target].size() == 1)
                ++target;
            auto depth = static_cast<int>(path.size());
            auto candidates = cells[target];
            std::sort(candidates.begin(), candidates.end());

            std::vector<Vertex> tried;
            for (auto v : candidates) {
                if (equivalent_to_tried(v, tried))
                    continue;
                Cells child;
                child.reserve(cells.size() + 1);
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    if (i != target) {
                        child.push_back(cells[i]);
                        continue;
                    }
                    child.push_back({v});
                    std::vector<Vertex> rest;
                    for (auto w : cells[i])
                        if (w != v)
                            rest.push_back(w);
                    child.push_back(std::move(rest));
                }
                path.push_back(v);
                auto jump = explore(std::move(child));
                path.pop_back();
                tried.push_back(v);
                if (jump != -1 && jump < depth)
                    return jump;
            }
            return -1;
        }
    };

    auto with_new_vertex(const Graph & parent, unsigned mask) -> Graph
    {
        auto k = parent.vertex_count();
        Graph child(k + 1);
        for (auto [u, v] : parent.edges())
            child.add_edge(u, v);
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u)
                child.add_edge(i, k);
        return child;
    }

    auto deletion_key(const Graph & g, Vertex u) -> std::vector<int>
    {
        std::vector<int> key{g.degree(u)};
        for (auto w : g.neighbours(u))
            key.push_back(g.degree(w));
        std::sort(key.begin() + 1, key.end(), std::greater<>());
        return key;
    }

    // The new (last) vertex must maximise (cheap key, code of the graph with it
    // deleted); ties among maximisers all delete to isomorphic parents.
    auto is_canonical_deletion(const Graph & child, const std::string & parent_code) -> bool
    {
        auto last = child.vertex_count() - 1;
        auto key = deletion_key(child, last);
        std::vector<Vertex> tied;
        for (Vertex u = 0; u < last; ++u) {
            auto other = deletion_key(child, u);
            if (other > key)
                return false;
            if (other == key)
                tied.push_back(u);
        }
        for (auto u : tied) {
            auto rest = child.vertices();
            rest.erase(u);
            if (canonical_code(induced(child, rest)) > parent_code)
                return false;
        }
        return true;
    }

    struct Augmenter
    {
        int target;
        const GraphPredicate & filter;
        const GraphVisitor & visit;
        const GraphPredicate & hereditary;

        void grow(const Graph & parent)
        {
            auto k = parent.vertex_count();
            if (k == target) {
                if (! filter || filter(parent))
                    visit(parent);
                return;
            }
            auto parent_code = write_graph6(parent);
            std::unordered_set<std::string> seen;
            std::vector<Graph> children;
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                auto child = with_new_vertex(parent, mask);
                if (hereditary && ! hereditary(child))
                    continue;
                if (! is_canonical_deletion(child, parent_code))
                    continue;
                auto form = canonical_form(child);
                if (! seen.insert(write_graph6(form.graph)).second)
                    continue;
                children.push_back(std::move(form.graph));
            }
            for (auto & c : children)
                grow(c);
        }
    };
}

auto canonical_form(const Graph & g) -> CanonicalForm
{
    auto n = g.vertex_count();
    CanonicalForm out;
    if (n == 0)
        return out;
    Search search(g);
    Cells cells{std::vector<Vertex>(static_cast<std::size_t>(n))};
    std::iota(cells[0].begin(), cells[0].end(), 0);
    search.explore(std::move(cells));
    out.position.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        out.position[search.best_order[i]] = i;
    out.graph = relabel(g, out.position);
    return out;
}

auto canonical_code(const Graph & g) -> std::string
{
    return write_graph6(canonical_form(g).graph);
}

void enumerate_graphs(int n, const GraphPredicate & filter, const GraphVisitor & visit, const EnumerationOptions & options)
{
    if (n < 0)
        throw InputError("enumerate_graphs: negative n");
    if (n > options.cap)
        throw CapExceeded("enumerate_graphs: n = " + std::to_string(n) + " exceeds cap " + std::to_string(options.cap));
    if (n > 31)
        throw CapExceeded("enumerate_graphs: n above 31 is not supported");
    Graph root(0);
    if (options.hereditary && ! options.hereditary(root))
        return;
    Augmenter{n, filter, visit, options.hereditary}.grow(root);
}

auto enumerate_graphs(int n, const GraphPredicate & filter, const EnumerationOptions & options) -> std::vector<Graph>
{
    std::vector<Graph> out;
    enumerate_graphs(n, filter, [&](const Graph & g) { out.push_back(g); }, options);
    return out;
}

void enumerate_graphs_up_to(int n, const GraphPredicate & filter, const GraphVisitor & visit, const EnumerationOptions & options)
{
    for (int k = 0; k <= n; ++k)
        enumerate_graphs(k, filter, visit, options);
}

} // namespace holeforge
