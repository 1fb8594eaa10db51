#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "csum/matrix.hpp"

namespace csum {

using BigInt = boost::multiprecision::cpp_int;

// Which collapsing operator a computation refers to: the signed 2x2 mixed
// difference (balanced) or the plain 2x2 window sum (unbalanced).
enum class Flavor { balanced, unbalanced };

enum class MongeClass { monge, anti_monge, both, neither };

// u e_n^T + e_m v^T (balanced) or u f_n^T + f_m v^T (unbalanced), kept in
// factored form until materialized.
struct KernelElement {
    Group group;
    std::vector<std::int64_t> u; // length m
    std::vector<std::int64_t> v; // length n
    Flavor flavor;
};

// Serial reference kernels. Plain loops, no threading; kept as the
// baseline the parallel versions are tested and benchmarked against.
namespace serial {
DenseMatrix collapse_balanced(const DenseMatrix& a);
DenseMatrix collapse(const DenseMatrix& a);
DenseMatrix checkerboard(const DenseMatrix& a);
DenseMatrix plus_construction(const DenseMatrix& a);
DenseMatrix canonicalize(const DenseMatrix& a);
} // namespace serial

// OpenMP-parallel entry points. Semantics identical to serial::*.

// (m-1)x(n-1) matrix of a[i][j] - a[i+1][j] - a[i][j+1] + a[i+1][j+1].
DenseMatrix collapse_balanced(const DenseMatrix& a);

// (m-1)x(n-1) matrix of 2x2 window sums.
DenseMatrix collapse(const DenseMatrix& a);

DenseMatrix collapse(const DenseMatrix& a, Flavor flavor);

// Entrywise sign flip (-1)^(i+j), 1-based; an involution intertwining the
// two collapse flavors.
DenseMatrix checkerboard(const DenseMatrix& a);

// Checkerboard on a partial matrix: blanks stay blank.
PartialMatrix checkerboard(const PartialMatrix& a);

// (m+1)x(n+1) summed-area table with a leading zero row and column;
// the balanced collapse of the result is the input.
DenseMatrix plus_construction(const DenseMatrix& a);

// The unique equivalent matrix whose first row and column are zero.
DenseMatrix canonicalize(const DenseMatrix& a);

KernelElement make_kernel_element(const Group& g, std::vector<std::int64_t> u,
                                  std::vector<std::int64_t> v, Flavor flavor);

DenseMatrix materialize(const KernelElement& k);

// True iff a collapses to zero under the given flavor.
bool in_kernel(const DenseMatrix& a, Flavor flavor);

// True iff a - b is a kernel element, i.e. the two share a canonical form.
bool equivalent(const DenseMatrix& a, const DenseMatrix& b);

// Classification by the entrywise sign of the balanced collapse.
// Integer group only.
MongeClass monge_class(const DenseMatrix& a);

const char* to_string(MongeClass c);

// A matrix whose collapse (of the given flavor) equals b.
DenseMatrix preimage_of(const DenseMatrix& b, Flavor flavor);

// k^(m+n-1): the number of preimages of any target, |G| = k finite.
BigInt count_preimages(int m, int n, const Group& g);

// k^((m-1)(n-1)): the number of equivalence classes of G^(m x n).
BigInt count_classes(int m, int n, const Group& g);

} // namespace csum
