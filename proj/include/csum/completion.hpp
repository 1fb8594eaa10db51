#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "csum/operators.hpp"

namespace csum {

// Vertex numbering for the bipartite incidence graph: 0..m-1 are the row
// vertices x_1..x_m, m..m+n-1 are the column vertices y_1..y_n.
struct IncidenceGraph {
    int m = 0;
    int n = 0;
    std::vector<std::pair<int, int>> edges; // specified cells (i, j), row-major order
    std::vector<int> component;             // per-vertex component id
    int component_count = 0;

    int row_vertex(int i) const { return i; }
    int col_vertex(int j) const { return m + j; }
    int component_of_row(int i) const { return component[i]; }
    int component_of_col(int j) const { return component[m + j]; }
};

IncidenceGraph build_graph(const PartialMatrix& a);

// A cycle of the incidence graph with its alternating entry sum. The
// vertex sequence starts at a row vertex and omits the closing repeat.
struct CycleWitness {
    std::vector<int> vertices;
    std::int64_t sum = 0;
};

struct CycleBalanceReport {
    bool balanced = true;
    std::optional<CycleWitness> violation;
};

// Potential-method cycle-balance test: true iff every cycle's alternating
// sum vanishes. Returns one violating fundamental cycle on failure.
CycleBalanceReport cycle_balance(const PartialMatrix& a);

inline bool is_cycle_balanced(const PartialMatrix& a) {
    return cycle_balance(a).balanced;
}

// Does a admit a completion whose collapse (of the given flavor) is b?
bool check_consistency(const PartialMatrix& a, const DenseMatrix& b, Flavor flavor);

struct CompletionOutcome {
    bool consistent = false;
    std::optional<DenseMatrix> witness;
    int component_count = 0;
    // Exact count for finite groups; nullopt means infinitely many
    // (infinite group, disconnected pattern).
    std::optional<BigInt> completion_count;
    bool unique = false;
    std::optional<CycleWitness> violation; // set when inconsistent
};

CompletionOutcome complete(const PartialMatrix& a, const DenseMatrix& b, Flavor flavor);

// Streams every completion of a collapsing to b, each exactly once, in a
// deterministic order. Finite groups only.
class CompletionEnumerator {
  public:
    CompletionEnumerator(const PartialMatrix& a, const DenseMatrix& b, Flavor flavor);

    std::optional<DenseMatrix> next();

    const BigInt& total() const { return total_; }

  private:
    Flavor flavor_;
    std::optional<DenseMatrix> witness_; // balanced-domain witness
    IncidenceGraph graph_;
    std::vector<std::int64_t> elements_;
    std::vector<std::size_t> odometer_; // offset index per non-anchor component
    bool done_ = false;
    BigInt total_ = 0;
};

std::vector<DenseMatrix> enumerate_completions(const PartialMatrix& a,
                                               const DenseMatrix& b, Flavor flavor);

// Uniqueness of the completion depends only on the blank pattern: it holds
// iff the incidence graph is connected.
bool uniqueness(const PartialMatrix& a);

// CLI-facing helpers for naming vertices ("x3", "y2").
std::string vertex_name(const IncidenceGraph& g, int v);
std::string format_cycle(const IncidenceGraph& g, const CycleWitness& w);

} // namespace csum
