#pragma once

#include "csum/completion.hpp"
#include "csum/matrix.hpp"
#include "csum/operators.hpp"

// Deliberately naive reference implementations over small finite groups.
// These share only the scalar arithmetic with the main modules: the
// collapse is re-evaluated from its defining formula and the graph work
// is redone from scratch, so agreement with the optimized paths is
// evidence rather than tautology.
namespace csum::oracle {

struct Budget {
    std::int64_t max_candidates = 10'000'000;
    int max_cycle_vertices = 14;
};

// Direct formula evaluation of the requested collapse, no shared kernels.
DenseMatrix brute_collapse(const DenseMatrix& a, Flavor flavor);

// Every matrix in G^(m x n), lexicographic by ascending residues.
std::vector<DenseMatrix> all_matrices(int m, int n, const Group& g,
                                      const Budget& budget = {});

// Every X with the requested collapse equal to b.
std::vector<DenseMatrix> brute_preimages(const DenseMatrix& b, Flavor flavor,
                                         const Budget& budget = {});

// Every completion of a whose collapse equals b, by filling blanks in all
// combinations and filtering.
std::vector<DenseMatrix> brute_completions(const PartialMatrix& a, const DenseMatrix& b,
                                           Flavor flavor, const Budget& budget = {});

struct BruteCycle {
    std::vector<int> vertices; // starts at the smallest vertex (an x-vertex)
    std::int64_t sum = 0;      // alternating entry sum
    bool balanced = false;
};

// Every simple cycle of the incidence graph, once up to rotation and
// reflection, with its alternating sum.
std::vector<BruteCycle> brute_cycles(const PartialMatrix& a, const Budget& budget = {});

} // namespace csum::oracle
