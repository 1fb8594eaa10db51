#include "csum/completion.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace csum {
namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i)
            parent[i] = i;
    }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

// Forest scan assigning a potential to every vertex so that
// p(x_i) + p(y_j) = value(i, j) on tree edges; a is cycle-balanced iff
// every non-tree edge satisfies the same relation.
struct Scan {
    bool ok = true;
    std::optional<CycleWitness> violation;
    std::vector<std::int64_t> potential;
};

Scan potential_scan(const PartialMatrix& a,
                    const std::vector<std::pair<int, int>>& extra) {
    const Group& g = a.group();
    const int m = a.rows(), n = a.cols(), V = m + n;

    // value of the edge at cell (i, j); extra cells carry zero
    auto value = [&](int i, int j) -> std::int64_t {
        return a.specified(i, j) ? a(i, j) : 0;
    };

    std::vector<std::vector<std::pair<int, std::int64_t>>> adj(V); // (neighbor, cell value)
    std::vector<std::pair<int, int>> all_edges;
    auto add_edge = [&](int i, int j) {
        adj[i].push_back({m + j, value(i, j)});
        adj[m + j].push_back({i, value(i, j)});
        all_edges.push_back({i, j});
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (a.specified(i, j))
                add_edge(i, j);
    for (auto [i, j] : extra)
        add_edge(i, j);

    Scan scan;
    scan.potential.assign(V, 0);
    std::vector<int> parent(V, -1);
    std::vector<bool> seen(V, false);

    for (int root = 0; root < V; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [w, val] : adj[u]) {
                if (seen[w])
                    continue;
                seen[w] = true;
                parent[w] = u;
                scan.potential[w] = g.sub(val, scan.potential[u]);
                q.push(w);
            }
        }
    }

    // check the non-tree edges; on the first failure, report the
    // fundamental cycle through the tree
    for (auto [i, j] : all_edges) {
        int x = i, y = m + j;
        if (parent[y] == x || parent[x] == y)
            continue;
        if (g.add(scan.potential[x], scan.potential[y]) == value(i, j))
            continue;

        std::vector<int> chain_x; // x up to its root
        for (int v = x; v != -1; v = parent[v])
            chain_x.push_back(v);
        std::vector<bool> on_chain(V, false);
        for (int v : chain_x)
            on_chain[v] = true;
        std::vector<int> chain_y;
        int lca = y;
        while (!on_chain[lca]) {
            chain_y.push_back(lca);
            lca = parent[lca];
        }

        CycleWitness w;
        for (int v : chain_x) {
            w.vertices.push_back(v);
            if (v == lca)
                break;
        }
        for (auto it = chain_y.rbegin(); it != chain_y.rend(); ++it)
            w.vertices.push_back(*it);

        // alternating sum: + on x->y steps, - on y->x steps
        std::int64_t sum = 0;
        const int L = static_cast<int>(w.vertices.size());
        for (int t = 0; t < L; ++t) {
            int u = w.vertices[t];
            int v = w.vertices[(t + 1) % L];
            std::int64_t val = u < m ? value(u, v - m) : value(v, u - m);
            sum = u < m ? g.add(sum, val) : g.sub(sum, val);
        }
        w.sum = sum;
        scan.ok = false;
        scan.violation = std::move(w);
        return scan;
    }
    return scan;
}

// Zero-valued cells joining all components of the incidence graph into
// the anchor (the component of x_1) without creating new cycles.
std::vector<std::pair<int, int>> select_spanning_cells(const IncidenceGraph& g) {
    const int cc = g.component_count;
    if (cc <= 1)
        return {};

    std::vector<int> min_x(cc, -1), min_y(cc, -1);
    for (int i = 0; i < g.m; ++i) {
        int c = g.component_of_row(i);
        if (min_x[c] < 0)
            min_x[c] = i;
    }
    for (int j = 0; j < g.n; ++j) {
        int c = g.component_of_col(j);
        if (min_y[c] < 0)
            min_y[c] = j;
    }

    // the component of x_1 always has id 0
    int anchor_x = min_x[0], anchor_y = min_y[0];
    std::vector<std::pair<int, int>> cells;
    std::vector<bool> merged(cc, false);
    merged[0] = true;
    int remaining = cc - 1;
    while (remaining > 0) {
        int before = remaining;
        for (int c = 1; c < cc; ++c) {
            if (merged[c])
                continue;
            if (min_x[c] >= 0 && anchor_y >= 0) {
                cells.push_back({min_x[c], anchor_y});
            } else if (min_y[c] >= 0 && anchor_x >= 0) {
                cells.push_back({anchor_x, min_y[c]});
            } else {
                continue; // joinable only once the anchor has both sides
            }
            merged[c] = true;
            --remaining;
            if (anchor_x < 0 || (min_x[c] >= 0 && min_x[c] < anchor_x))
                anchor_x = min_x[c];
            if (anchor_y < 0 || (min_y[c] >= 0 && min_y[c] < anchor_y))
                anchor_y = min_y[c];
        }
        if (remaining == before)
            throw error("internal: spanning cell selection stalled");
    }
    return cells;
}

void require_target_shape(const PartialMatrix& a, const DenseMatrix& b) {
    require_same_group(a.group(), b.group());
    if (a.rows() < 2 || a.cols() < 2)
        throw dimension_error("completion requires at least a 2x2 partial matrix");
    if (b.rows() != a.rows() - 1 || b.cols() != a.cols() - 1)
        throw dimension_error("target must be (m-1) x (n-1)");
}

} // namespace

IncidenceGraph build_graph(const PartialMatrix& a) {
    IncidenceGraph g;
    g.m = a.rows();
    g.n = a.cols();
    const int V = g.m + g.n;
    UnionFind uf(V);
    for (int i = 0; i < g.m; ++i)
        for (int j = 0; j < g.n; ++j)
            if (a.specified(i, j)) {
                g.edges.push_back({i, j});
                uf.unite(i, g.m + j);
            }

    // number components by smallest contained vertex (x before y, ascending)
    g.component.assign(V, -1);
    std::vector<int> root_id(V, -1);
    for (int v = 0; v < V; ++v) {
        int r = uf.find(v);
        if (root_id[r] < 0)
            root_id[r] = g.component_count++;
        g.component[v] = root_id[r];
    }
    return g;
}

CycleBalanceReport cycle_balance(const PartialMatrix& a) {
    Scan s = potential_scan(a, {});
    return {s.ok, std::move(s.violation)};
}

bool check_consistency(const PartialMatrix& a, const DenseMatrix& b, Flavor flavor) {
    if (flavor == Flavor::unbalanced)
        return check_consistency(checkerboard(a), checkerboard(b), Flavor::balanced);
    require_target_shape(a, b);
    return is_cycle_balanced(subtract_dense(a, plus_construction(b)));
}

CompletionOutcome complete(const PartialMatrix& a, const DenseMatrix& b, Flavor flavor) {
    if (flavor == Flavor::unbalanced) {
        CompletionOutcome out = complete(checkerboard(a), checkerboard(b), Flavor::balanced);
        if (out.witness) {
            DenseMatrix w = checkerboard(*out.witness);
            if (!a.extended_by(w) || !(collapse(w) == b))
                throw error("internal: witness postcondition failed (unbalanced)");
            out.witness = std::move(w);
        }
        return out;
    }

    require_target_shape(a, b);
    const Group& g = a.group();

    DenseMatrix bt = plus_construction(b);
    PartialMatrix reduced = subtract_dense(a, bt);
    IncidenceGraph graph = build_graph(a);

    CompletionOutcome out;
    out.component_count = graph.component_count;

    Scan scan = potential_scan(reduced, select_spanning_cells(graph));
    if (!scan.ok) {
        out.consistent = false;
        out.completion_count = 0;
        out.unique = false;
        out.violation = std::move(scan.violation);
        return out;
    }

    // fill by potentials (the alternating path sum collapses to
    // p(x_s) + p(y_t) on the spanning tree), then restore the target
    DenseMatrix witness(g, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            witness.set(i, j,
                        g.add(g.add(scan.potential[i], scan.potential[a.rows() + j]),
                              bt(i, j)));

    if (!a.extended_by(witness) || !(collapse_balanced(witness) == b))
        throw error("internal: witness postcondition failed");

    out.consistent = true;
    out.witness = std::move(witness);
    out.unique = graph.component_count == 1;
    if (g.finite()) {
        BigInt count = 1;
        for (int c = 1; c < graph.component_count; ++c)
            count *= g.order();
        out.completion_count = count;
    } else if (graph.component_count == 1) {
        out.completion_count = BigInt(1);
    } // else: infinitely many, left disengaged

    return out;
}

CompletionEnumerator::CompletionEnumerator(const PartialMatrix& a, const DenseMatrix& b,
                                           Flavor flavor)
    : flavor_(flavor), graph_(build_graph(a)) {
    if (!a.group().finite())
        throw unsupported_error("completion enumeration requires a finite group");

    const PartialMatrix pa = flavor == Flavor::unbalanced ? checkerboard(a) : a;
    const DenseMatrix bb = flavor == Flavor::unbalanced ? checkerboard(b) : b;
    CompletionOutcome out = complete(pa, bb, Flavor::balanced);
    if (!out.consistent) {
        done_ = true;
        return;
    }
    witness_ = std::move(out.witness);
    elements_ = a.group().enumerate();
    odometer_.assign(static_cast<std::size_t>(graph_.component_count - 1), 0);
    total_ = *out.completion_count;
}

std::optional<DenseMatrix> CompletionEnumerator::next() {
    if (done_)
        return std::nullopt;

    const Group& g = witness_->group();
    // per-component offsets; the anchor component (id 0, containing x_1)
    // is pinned to zero
    auto offset = [&](int comp) -> std::int64_t {
        return comp == 0 ? 0 : elements_[odometer_[comp - 1]];
    };
    DenseMatrix out(g, witness_->rows(), witness_->cols());
    for (int i = 0; i < out.rows(); ++i) {
        std::int64_t ui = offset(graph_.component_of_row(i));
        for (int j = 0; j < out.cols(); ++j) {
            std::int64_t vj = g.neg(offset(graph_.component_of_col(j)));
            out.set(i, j, g.add((*witness_)(i, j), g.add(ui, vj)));
        }
    }

    // advance the odometer, least significant digit last
    done_ = true;
    for (std::size_t d = odometer_.size(); d-- > 0;) {
        if (++odometer_[d] < elements_.size()) {
            done_ = false;
            break;
        }
        odometer_[d] = 0;
    }

    if (flavor_ == Flavor::unbalanced)
        return checkerboard(out);
    return out;
}

std::vector<DenseMatrix> enumerate_completions(const PartialMatrix& a,
                                               const DenseMatrix& b, Flavor flavor) {
    CompletionEnumerator en(a, b, flavor);
    std::vector<DenseMatrix> out;
    while (auto c = en.next())
        out.push_back(std::move(*c));
    return out;
}

bool uniqueness(const PartialMatrix& a) {
    return build_graph(a).component_count == 1;
}

std::string vertex_name(const IncidenceGraph& g, int v) {
    return v < g.m ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - g.m + 1);
}

std::string format_cycle(const IncidenceGraph& g, const CycleWitness& w) {
    std::string out;
    for (int v : w.vertices) {
        out += vertex_name(g, v);
        out += ' ';
    }
    out += vertex_name(g, w.vertices.front());
    return out;
}

} // namespace csum
