#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csum/errors.hpp"

namespace csum {

// An additive abelian group: the integers, or the integers mod k (k >= 2).
// Elements are stored as int64_t; modular residues are kept reduced into
// [0, k). Integer arithmetic is overflow-checked, never wrapping.
class Group {
  public:
    enum class Kind { integers, modular };

    static Group integers() { return Group(Kind::integers, 0); }

    static Group mod(std::int64_t k) {
        if (k < 2)
            throw error("modulus must be >= 2, got " + std::to_string(k));
        return Group(Kind::modular, k);
    }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::modular; }

    // Group order; only valid for finite groups.
    std::int64_t order() const {
        if (!finite())
            throw unsupported_error("infinite group has no order");
        return modulus_;
    }

    std::int64_t modulus() const { return modulus_; }

    bool operator==(const Group& o) const = default;

    // Reduce an arbitrary raw value into canonical form.
    std::int64_t canon(std::int64_t x) const {
        if (kind_ == Kind::integers)
            return x;
        std::int64_t r = x % modulus_;
        return r < 0 ? r + modulus_ : r;
    }

    std::int64_t zero() const { return 0; }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        if (kind_ == Kind::modular)
            return canon(a - modulus_ + b); // a+b <= 2(k-1), shift avoids overflow for large k
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            throw overflow_error("integer overflow in add");
        return r;
    }

    std::int64_t neg(std::int64_t a) const {
        if (kind_ == Kind::modular)
            return a == 0 ? 0 : modulus_ - a;
        if (a == INT64_MIN)
            throw overflow_error("integer overflow in negate");
        return -a;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        if (kind_ == Kind::modular)
            return canon(a - b);
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r))
            throw overflow_error("integer overflow in subtract");
        return r;
    }

    // All elements in canonical order (ascending residues).
    std::vector<std::int64_t> enumerate() const {
        if (!finite())
            throw unsupported_error("cannot enumerate an infinite group");
        std::vector<std::int64_t> out(static_cast<std::size_t>(modulus_));
        for (std::int64_t i = 0; i < modulus_; ++i)
            out[static_cast<std::size_t>(i)] = i;
        return out;
    }

    // Text form used in file headers and on the CLI: "int" or "zmod <k>".
    std::string spec_string() const {
        return kind_ == Kind::integers ? "int" : "zmod " + std::to_string(modulus_);
    }

    static std::optional<Group> parse_spec(const std::string& text);

  private:
    Group(Kind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::int64_t modulus_; // 0 for integers
};

// A group element paired with its group. The heavy loops work on raw
// int64_t through Group directly; Scalar is the safe boundary type.
struct Scalar {
    Group group;
    std::int64_t value;

    bool operator==(const Scalar& o) const = default;
};

inline void require_same_group(const Group& a, const Group& b) {
    if (!(a == b))
        throw group_mismatch_error("operands belong to different groups (" +
                                   a.spec_string() + " vs " + b.spec_string() + ")");
}

inline Scalar add(const Scalar& a, const Scalar& b) {
    require_same_group(a.group, b.group);
    return {a.group, a.group.add(a.value, b.value)};
}

inline Scalar negate(const Scalar& a) { return {a.group, a.group.neg(a.value)}; }

inline std::vector<Scalar> enumerate(const Group& g) {
    std::vector<Scalar> out;
    for (std::int64_t v : g.enumerate())
        out.push_back({g, v});
    return out;
}

} // namespace csum
