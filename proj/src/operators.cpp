#include "csum/operators.hpp"

#include <cstdlib>

namespace csum {
namespace {

// Below this many output entries the OpenMP versions run serially; thread
// startup dominates on small matrices.
constexpr std::int64_t kParallelThreshold = 1 << 15;

// Arithmetic policies for the hot loops. Group's own methods throw on
// integer overflow, which is not allowed inside an OpenMP region, so the
// integer policy records a flag instead and the caller throws afterward.
struct ModOps {
    std::int64_t k;
    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r = (a - k) + b;
        return r < 0 ? r + k : r;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t r = a - b;
        return r < 0 ? r + k : r;
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : k - a; }
};

struct IntOps {
    int* overflow;
    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            *overflow = 1;
        return r;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r))
            *overflow = 1;
        return r;
    }
    std::int64_t neg(std::int64_t a) const {
        if (a == INT64_MIN)
            *overflow = 1;
        return -a;
    }
};

void require_collapsible(const DenseMatrix& a) {
    if (a.rows() < 2 || a.cols() < 2)
        throw dimension_error("collapse requires at least a 2x2 matrix");
}

template <class Ops>
void collapse_kernel(const DenseMatrix& a, DenseMatrix& out, bool balanced,
                     const Ops& ops, bool parallel) {
    const int m = out.rows(), n = out.cols(), cols = a.cols();
    const std::int64_t* src = a.data().data();
    std::int64_t* dst = out.data().data();
#pragma omp parallel for if (parallel && std::int64_t(m) * n > kParallelThreshold)
    for (int i = 0; i < m; ++i) {
        const std::int64_t* r0 = src + std::size_t(i) * cols;
        const std::int64_t* r1 = r0 + cols;
        std::int64_t* o = dst + std::size_t(i) * n;
        for (int j = 0; j < n; ++j) {
            if (balanced)
                o[j] = ops.add(ops.sub(ops.sub(r0[j], r1[j]), r0[j + 1]), r1[j + 1]);
            else
                o[j] = ops.add(ops.add(ops.add(r0[j], r1[j]), r0[j + 1]), r1[j + 1]);
        }
    }
}

template <class Ops>
void checkerboard_kernel(const DenseMatrix& a, DenseMatrix& out, const Ops& ops,
                         bool parallel) {
    const int m = a.rows(), n = a.cols();
    const std::int64_t* src = a.data().data();
    std::int64_t* dst = out.data().data();
#pragma omp parallel for if (parallel && std::int64_t(m) * n > kParallelThreshold)
    for (int i = 0; i < m; ++i) {
        std::int64_t* o = dst + std::size_t(i) * n;
        const std::int64_t* s = src + std::size_t(i) * n;
        for (int j = 0; j < n; ++j)
            o[j] = ((i + j) % 2 == 0) ? s[j] : ops.neg(s[j]);
    }
}

// Summed-area table in two sweeps: per-row prefix sums, then a downward
// accumulation per column.
template <class Ops>
void plus_kernel(const DenseMatrix& a, DenseMatrix& out, const Ops& ops,
                 bool parallel) {
    const int m = a.rows(), n = a.cols();
    std::int64_t* dst = out.data().data();
    const std::int64_t* src = a.data().data();
    const int on = n + 1;
    const bool par = parallel && std::int64_t(m) * n > kParallelThreshold;
#pragma omp parallel for if (par)
    for (int p = 1; p <= m; ++p) {
        const std::int64_t* s = src + std::size_t(p - 1) * n;
        std::int64_t* o = dst + std::size_t(p) * on;
        o[0] = 0;
        for (int q = 1; q <= n; ++q)
            o[q] = ops.add(o[q - 1], s[q - 1]);
    }
#pragma omp parallel for if (par)
    for (int q = 1; q <= n; ++q)
        for (int p = 2; p <= m; ++p)
            dst[std::size_t(p) * on + q] =
                ops.add(dst[std::size_t(p) * on + q], dst[std::size_t(p - 1) * on + q]);
}

template <class Ops>
void canonicalize_kernel(const DenseMatrix& a, DenseMatrix& out, const Ops& ops,
                         bool parallel) {
    const int m = a.rows(), n = a.cols();
    const std::int64_t* src = a.data().data();
    std::int64_t* dst = out.data().data();
#pragma omp parallel for if (parallel && std::int64_t(m) * n > kParallelThreshold)
    for (int i = 0; i < m; ++i) {
        const std::int64_t* s = src + std::size_t(i) * n;
        std::int64_t* o = dst + std::size_t(i) * n;
        for (int j = 0; j < n; ++j)
            o[j] = ops.add(ops.sub(ops.sub(s[j], s[0]), src[j]), src[0]);
    }
}

// Dispatch a kernel under the right arithmetic policy, surfacing overflow
// as an exception once the parallel region has ended.
template <class Body>
void run(const Group& g, Body&& body) {
    if (g.kind() == Group::Kind::modular) {
        body(ModOps{g.modulus()});
    } else {
        int overflow = 0;
        body(IntOps{&overflow});
        if (overflow)
            throw overflow_error("integer overflow in matrix kernel");
    }
}

DenseMatrix collapse_impl(const DenseMatrix& a, bool balanced, bool parallel) {
    require_collapsible(a);
    DenseMatrix out(a.group(), a.rows() - 1, a.cols() - 1);
    run(a.group(), [&](auto ops) { collapse_kernel(a, out, balanced, ops, parallel); });
    return out;
}

DenseMatrix checkerboard_impl(const DenseMatrix& a, bool parallel) {
    DenseMatrix out(a.group(), a.rows(), a.cols());
    run(a.group(), [&](auto ops) { checkerboard_kernel(a, out, ops, parallel); });
    return out;
}

DenseMatrix plus_impl(const DenseMatrix& a, bool parallel) {
    DenseMatrix out(a.group(), a.rows() + 1, a.cols() + 1);
    run(a.group(), [&](auto ops) { plus_kernel(a, out, ops, parallel); });
    return out;
}

DenseMatrix canonicalize_impl(const DenseMatrix& a, bool parallel) {
    DenseMatrix out(a.group(), a.rows(), a.cols());
    run(a.group(), [&](auto ops) { canonicalize_kernel(a, out, ops, parallel); });
    return out;
}

} // namespace

namespace serial {
DenseMatrix collapse_balanced(const DenseMatrix& a) { return collapse_impl(a, true, false); }
DenseMatrix collapse(const DenseMatrix& a) { return collapse_impl(a, false, false); }
DenseMatrix checkerboard(const DenseMatrix& a) { return checkerboard_impl(a, false); }
DenseMatrix plus_construction(const DenseMatrix& a) { return plus_impl(a, false); }
DenseMatrix canonicalize(const DenseMatrix& a) { return canonicalize_impl(a, false); }
} // namespace serial

DenseMatrix collapse_balanced(const DenseMatrix& a) { return collapse_impl(a, true, true); }
DenseMatrix collapse(const DenseMatrix& a) { return collapse_impl(a, false, true); }

DenseMatrix collapse(const DenseMatrix& a, Flavor flavor) {
    return flavor == Flavor::balanced ? collapse_balanced(a) : collapse(a);
}

DenseMatrix checkerboard(const DenseMatrix& a) { return checkerboard_impl(a, true); }

PartialMatrix checkerboard(const PartialMatrix& a) {
    PartialMatrix out(a.group(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.specified(i, j))
                out.set(i, j, (i + j) % 2 == 0 ? a(i, j) : a.group().neg(a(i, j)));
    return out;
}

DenseMatrix plus_construction(const DenseMatrix& a) { return plus_impl(a, true); }

DenseMatrix canonicalize(const DenseMatrix& a) { return canonicalize_impl(a, true); }

KernelElement make_kernel_element(const Group& g, std::vector<std::int64_t> u,
                                  std::vector<std::int64_t> v, Flavor flavor) {
    for (auto& x : u)
        x = g.canon(x);
    for (auto& x : v)
        x = g.canon(x);
    return {g, std::move(u), std::move(v), flavor};
}

DenseMatrix materialize(const KernelElement& k) {
    const int m = static_cast<int>(k.u.size());
    const int n = static_cast<int>(k.v.size());
    DenseMatrix out(k.group, m, n);
    const Group& g = k.group;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (k.flavor == Flavor::balanced) {
                out.set(i, j, g.add(k.u[i], k.v[j]));
            } else {
                // f-vector signs: coordinate i carries (-1)^i, 1-based.
                std::int64_t ui = (j % 2 == 0) ? g.neg(k.u[i]) : k.u[i];
                std::int64_t vj = (i % 2 == 0) ? g.neg(k.v[j]) : k.v[j];
                out.set(i, j, g.add(ui, vj));
            }
        }
    }
    return out;
}

bool in_kernel(const DenseMatrix& a, Flavor flavor) {
    if (a.rows() < 2 || a.cols() < 2)
        throw dimension_error("kernel membership requires at least a 2x2 matrix");
    if (flavor == Flavor::unbalanced)
        return in_kernel(checkerboard(a), Flavor::balanced);
    return canonicalize(a).is_zero();
}

bool equivalent(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_group(a.group(), b.group());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("dimension mismatch in equivalence test");
    return canonicalize(a) == canonicalize(b);
}

MongeClass monge_class(const DenseMatrix& a) {
    if (a.group().kind() != Group::Kind::integers)
        throw unsupported_error("Monge classification requires the ordered integer group");
    require_collapsible(a);
    DenseMatrix d = collapse_balanced(a);
    bool any_pos = false, any_neg = false;
    for (std::int64_t v : d.data()) {
        any_pos |= v > 0;
        any_neg |= v < 0;
    }
    if (any_pos && any_neg)
        return MongeClass::neither;
    if (any_pos)
        return MongeClass::anti_monge;
    if (any_neg)
        return MongeClass::monge;
    return MongeClass::both;
}

const char* to_string(MongeClass c) {
    switch (c) {
    case MongeClass::monge: return "monge";
    case MongeClass::anti_monge: return "anti-monge";
    case MongeClass::both: return "both";
    case MongeClass::neither: return "neither";
    }
    std::abort();
}

DenseMatrix preimage_of(const DenseMatrix& b, Flavor flavor) {
    if (flavor == Flavor::balanced)
        return plus_construction(b);
    return checkerboard(plus_construction(checkerboard(b)));
}

static BigInt pow_order(const Group& g, std::int64_t exponent) {
    if (!g.finite())
        throw unsupported_error("counting requires a finite group");
    BigInt base = g.order();
    BigInt out = 1;
    for (std::int64_t i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

BigInt count_preimages(int m, int n, const Group& g) {
    if (m < 2 || n < 2)
        throw dimension_error("preimage counting requires m, n >= 2");
    return pow_order(g, std::int64_t(m) + n - 1);
}

BigInt count_classes(int m, int n, const Group& g) {
    if (m < 2 || n < 2)
        throw dimension_error("class counting requires m, n >= 2");
    return pow_order(g, std::int64_t(m - 1) * (n - 1));
}

} // namespace csum
