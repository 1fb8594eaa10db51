#include "csum/oracle.hpp"

#include <string>

namespace csum::oracle {
namespace {

// k^count against the candidate budget, refusing rather than truncating.
void check_budget(const Group& g, int count, const Budget& budget) {
    if (!g.finite())
        throw unsupported_error("brute-force enumeration requires a finite group");
    BigInt total = 1;
    for (int i = 0; i < count; ++i) {
        total *= g.order();
        if (total > budget.max_candidates)
            throw budget_error("enumeration of " + std::to_string(g.order()) + "^" +
                               std::to_string(count) + " candidates exceeds the budget");
    }
}

bool advance(std::vector<std::size_t>& digits, std::size_t base) {
    for (std::size_t d = digits.size(); d-- > 0;) {
        if (++digits[d] < base)
            return true;
        digits[d] = 0;
    }
    return false;
}

} // namespace

DenseMatrix brute_collapse(const DenseMatrix& a, Flavor flavor) {
    if (a.rows() < 2 || a.cols() < 2)
        throw dimension_error("collapse requires at least a 2x2 matrix");
    const Group& g = a.group();
    DenseMatrix out(g, a.rows() - 1, a.cols() - 1);
    for (int i = 0; i + 1 < a.rows(); ++i)
        for (int j = 0; j + 1 < a.cols(); ++j) {
            std::int64_t s;
            if (flavor == Flavor::balanced)
                s = g.add(g.sub(g.sub(a(i, j), a(i + 1, j)), a(i, j + 1)), a(i + 1, j + 1));
            else
                s = g.add(g.add(g.add(a(i, j), a(i + 1, j)), a(i, j + 1)), a(i + 1, j + 1));
            out.set(i, j, s);
        }
    return out;
}

std::vector<DenseMatrix> all_matrices(int m, int n, const Group& g, const Budget& budget) {
    check_budget(g, m * n, budget);
    const auto elems = g.enumerate();
    std::vector<DenseMatrix> out;
    std::vector<std::size_t> digits(static_cast<std::size_t>(m) * n, 0);
    do {
        DenseMatrix a(g, m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                a.set(i, j, elems[digits[static_cast<std::size_t>(i) * n + j]]);
        out.push_back(std::move(a));
    } while (advance(digits, elems.size()));
    return out;
}

std::vector<DenseMatrix> brute_preimages(const DenseMatrix& b, Flavor flavor,
                                         const Budget& budget) {
    std::vector<DenseMatrix> out;
    for (auto& x : all_matrices(b.rows() + 1, b.cols() + 1, b.group(), budget))
        if (brute_collapse(x, flavor) == b)
            out.push_back(std::move(x));
    return out;
}

std::vector<DenseMatrix> brute_completions(const PartialMatrix& a, const DenseMatrix& b,
                                           Flavor flavor, const Budget& budget) {
    require_same_group(a.group(), b.group());
    if (b.rows() != a.rows() - 1 || b.cols() != a.cols() - 1)
        throw dimension_error("target must be (m-1) x (n-1)");
    const Group& g = a.group();

    std::vector<std::pair<int, int>> blanks;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.blank(i, j))
                blanks.push_back({i, j});
    check_budget(g, static_cast<int>(blanks.size()), budget);

    DenseMatrix candidate(g, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.specified(i, j))
                candidate.set(i, j, a(i, j));

    const auto elems = g.enumerate();
    std::vector<DenseMatrix> out;
    std::vector<std::size_t> digits(blanks.size(), 0);
    do {
        for (std::size_t t = 0; t < blanks.size(); ++t)
            candidate.set(blanks[t].first, blanks[t].second, elems[digits[t]]);
        if (brute_collapse(candidate, flavor) == b)
            out.push_back(candidate);
    } while (advance(digits, elems.size()));
    return out;
}

std::vector<BruteCycle> brute_cycles(const PartialMatrix& a, const Budget& budget) {
    const int m = a.rows(), n = a.cols(), V = m + n;
    if (V > budget.max_cycle_vertices)
        throw budget_error("incidence graph has " + std::to_string(V) +
                           " vertices, above the cycle enumeration limit");

    std::vector<std::vector<int>> adj(V);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (a.specified(i, j)) {
                adj[i].push_back(m + j);
                adj[m + j].push_back(i);
            }

    std::vector<BruteCycle> out;
    std::vector<int> path;
    std::vector<bool> used(V, false);

    // every simple cycle is listed exactly once: the start is its
    // smallest vertex, and reflections are killed by requiring the second
    // vertex to be smaller than the closing one
    auto record = [&](const std::vector<int>& cycle) {
        BruteCycle c;
        c.vertices = cycle;
        const Group& g = a.group();
        const int L = static_cast<int>(cycle.size());
        std::int64_t sum = 0;
        for (int t = 0; t < L; ++t) {
            int u = cycle[t], v = cycle[(t + 1) % L];
            std::int64_t val = u < m ? a(u, v - m) : a(v, u - m);
            sum = u < m ? g.add(sum, val) : g.sub(sum, val);
        }
        c.sum = sum;
        c.balanced = sum == 0;
        out.push_back(std::move(c));
    };

    auto dfs = [&](auto&& self, int start, int u) -> void {
        for (int w : adj[u]) {
            if (w == start && path.size() >= 4 && path[1] < path.back())
                record(path);
            if (w <= start || used[w])
                continue;
            used[w] = true;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            used[w] = false;
        }
    };

    for (int s = 0; s < V; ++s) {
        path = {s};
        used.assign(V, false);
        used[s] = true;
        dfs(dfs, s, s);
    }
    return out;
}

} // namespace csum::oracle
