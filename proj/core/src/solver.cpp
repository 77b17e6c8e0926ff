#include "phimet/solver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <thread>

#include "phimet/checker.hpp"

namespace phimet {

std::string DistanceMatrix::to_tsv() const {
    std::string out;
    for (const auto& label : order) {
        out += '\t';
        out += label;
    }
    out += '\n';
    for (int i = 0; i < size(); ++i) {
        out += order[static_cast<size_t>(i)];
        for (int j = 0; j < size(); ++j) {
            out += '\t';
            const auto& cell = at(i, j);
            out += cell ? cell->lexeme() : "inf";
        }
        out += '\n';
    }
    return out;
}

nlohmann::json DistanceMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < size(); ++j) {
            const auto& cell = at(i, j);
            row.push_back(cell ? cell->lexeme() : "inf");
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"order", order}, {"d", rows}};
}

Weight path_weight(const TriangleFamily& family, const WeightedGraph& g,
                   std::span<const VertexId> path) {
    if (path.empty()) throw InvalidPath("path needs at least one vertex");
    std::vector<int> ids;
    ids.reserve(path.size());
    for (const auto& label : path) {
        int id = g.index_of(label);
        if (id < 0) throw InvalidPath("unknown vertex '" + label + "'");
        if (std::find(ids.begin(), ids.end(), id) != ids.end())
            throw InvalidPath("repeated vertex '" + label + "'");
        ids.push_back(id);
    }
    if (ids.size() == 1) return family.identity(g.mode());
    std::vector<Weight> weights;
    weights.reserve(ids.size() - 1);
    for (size_t i = 0; i + 1 < ids.size(); ++i) {
        int e = g.find_edge(ids[i], ids[i + 1]);
        if (e < 0)
            throw InvalidPath("vertices '" + std::string(path[i]) + "' and '" +
                              std::string(path[i + 1]) + "' are not adjacent");
        weights.push_back(g.edge(e).w);
    }
    return family.fold(weights);
}

SingleSource single_source(const WeightedGraph& g, const TriangleFamily& family,
                           int source, int excluded_edge) {
    family.require_mode(g.mode());
    int n = g.vertex_count();
    SingleSource out{std::vector<std::optional<Weight>>(static_cast<size_t>(n)),
                     std::vector<int>(static_cast<size_t>(n), -1)};
    struct Item {
        Weight w;
        int v;
    };
    auto later = [](const Item& a, const Item& b) {
        int c = a.w.compare(b.w);
        if (c != 0) return c > 0;
        return a.v > b.v;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
    std::vector<char> settled(static_cast<size_t>(n), 0);
    out.dist[static_cast<size_t>(source)] = family.identity(g.mode());
    queue.push({*out.dist[static_cast<size_t>(source)], source});
    while (!queue.empty()) {
        int u = queue.top().v;
        queue.pop();
        if (settled[static_cast<size_t>(u)]) continue;
        settled[static_cast<size_t>(u)] = 1;
        const Weight& du = *out.dist[static_cast<size_t>(u)];
        for (const auto& [v, e] : g.neighbors(u)) {
            if (e == excluded_edge) continue;
            Weight cand = family.eval(du, g.edge(e).w);
            auto& dv = out.dist[static_cast<size_t>(v)];
            int& pv = out.pred[static_cast<size_t>(v)];
            if (!dv || cand.less(*dv)) {
                if (settled[static_cast<size_t>(v)]) continue;
                dv = std::move(cand);
                pv = u;
                queue.push({*dv, v});
            } else if (cand == *dv && v != source &&
                       (pv < 0 || g.label(u) < g.label(pv))) {
                // Equal-cost paths: keep the smallest predecessor label.
                pv = u;
            }
        }
    }
    return out;
}

SingleSource single_source(const WeightedGraph& g, const TriangleFamily& family,
                           const VertexId& source) {
    return single_source(g, family, g.require_index(source));
}

namespace {

void fill_upper_rows(const WeightedGraph& g, const TriangleFamily& family,
                     DistanceMatrix& m, int first, int last) {
    size_t n = static_cast<size_t>(m.size());
    for (int s = first; s < last; ++s) {
        SingleSource ss = single_source(g, family, s);
        for (int t = s; t < m.size(); ++t)
            m.cells[static_cast<size_t>(s) * n + static_cast<size_t>(t)] =
                std::move(ss.dist[static_cast<size_t>(t)]);
    }
}

}  // namespace

DistanceMatrix all_pairs(const WeightedGraph& g, const TriangleFamily& family,
                         const SolveOptions& options) {
    if (options.max_fast_path && family.kind() == FamilyKind::Max)
        return max_bottleneck_all_pairs(g);
    family.require_mode(g.mode());
    int n = g.vertex_count();
    DistanceMatrix m{g.vertex_labels(),
                     std::vector<std::optional<Weight>>(
                         static_cast<size_t>(n) * static_cast<size_t>(n))};
    int threads = std::max(1, options.threads);
    if (threads == 1 || n < 2 * threads) {
        fill_upper_rows(g, family, m, 0, n);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int first = t * chunk, last = std::min(n, first + chunk);
            if (first >= last) break;
            pool.emplace_back(fill_upper_rows, std::cref(g), std::cref(family),
                              std::ref(m), first, last);
        }
        for (auto& worker : pool) worker.join();
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            m.cells[static_cast<size_t>(i) * static_cast<size_t>(n) +
                    static_cast<size_t>(j)] = m.at(j, i);
    return m;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

DistanceMatrix max_bottleneck_all_pairs(const WeightedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> order(static_cast<size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int c = g.edge(a).w.compare(g.edge(b).w);
        if (c != 0) return c < 0;
        return a < b;
    });
    UnionFind uf(n);
    std::vector<std::vector<std::pair<int, int>>> tree(static_cast<size_t>(n));
    for (int e : order) {
        const auto& rec = g.edge(e);
        if (uf.unite(rec.u, rec.v)) {
            tree[static_cast<size_t>(rec.u)].emplace_back(rec.v, e);
            tree[static_cast<size_t>(rec.v)].emplace_back(rec.u, e);
        }
    }
    DistanceMatrix m{g.vertex_labels(),
                     std::vector<std::optional<Weight>>(
                         static_cast<size_t>(n) * static_cast<size_t>(n))};
    Weight identity = Weight::zero(g.mode());
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        std::vector<std::optional<Weight>> dist(static_cast<size_t>(n));
        dist[static_cast<size_t>(s)] = identity;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [nbr, e] : tree[static_cast<size_t>(v)]) {
                if (dist[static_cast<size_t>(nbr)]) continue;
                const Weight& w = g.edge(e).w;
                const Weight& dv = *dist[static_cast<size_t>(v)];
                dist[static_cast<size_t>(nbr)] =
                    dv.compare(w) >= 0 ? dv : w;  // bottleneck along the tree
                stack.push_back(nbr);
            }
        }
        for (int t = 0; t < n; ++t)
            m.cells[static_cast<size_t>(s) * static_cast<size_t>(n) +
                    static_cast<size_t>(t)] =
                std::move(dist[static_cast<size_t>(t)]);
    }
    return m;
}

DistanceMatrix build_continuation(const WeightedGraph& g,
                                  const TriangleFamily& family,
                                  const ContinuationOptions& options) {
    family.require_mode(g.mode());
    if (!options.force) {
        Verdict verdict = check(g, family);
        if (!verdict.domain_violations.empty()) {
            const auto& bad = g.edge(verdict.domain_violations.front().edge_index);
            throw DomainError("weight " + bad.w.lexeme() + " on edge {" +
                              g.label(bad.u) + ", " + g.label(bad.v) +
                              "} is below the family domain floor");
        }
        if (!verdict.metrizable)
            throw NotMetrizable(
                "weight does not extend: some edge exceeds the combined weight "
                "of an alternative path (rerun with force to continue anyway)");
    }
    auto blocks = components(g);
    if (blocks.size() <= 1) return all_pairs(g, family, options.solve);

    // Representatives are the smallest labels per component; every other
    // component is tied to the globally smallest one by a bridge edge.
    std::vector<VertexId> reps;
    reps.reserve(blocks.size());
    for (const auto& block : blocks) reps.push_back(block.front());
    const VertexId& hub = reps.front();

    Weight floor = family.domain_floor(g.mode());
    WeightedGraph bridged(g.mode());
    for (const auto& label : g.vertex_labels()) bridged.add_vertex(label);
    for (const auto& e : g.edges())
        bridged.add_edge(g.label(e.u), g.label(e.v), e.w, e.lexeme);
    for (size_t i = 1; i < reps.size(); ++i) {
        Weight w = family.identity(g.mode());
        if (options.bridge_weight) w = *options.bridge_weight;
        if (auto it = options.component_bridges.find(reps[i]);
            it != options.component_bridges.end())
            w = it->second;
        if (w.less(floor))
            throw DomainError("bridge weight " + w.lexeme() +
                              " is below the family domain floor " +
                              floor.lexeme());
        bridged.add_edge(reps[i], hub, std::move(w));
    }
    return all_pairs(bridged, family, options.solve);
}

}  // namespace phimet
