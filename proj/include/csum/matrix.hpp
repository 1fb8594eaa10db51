#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "csum/group.hpp"

namespace csum {

// Dense m x n matrix over a single group. Entries are stored row-major
// in canonical form. Immutable after construction apart from the
// builder-style set() used during assembly.
class DenseMatrix {
  public:
    DenseMatrix(Group group, int rows, int cols)
        : group_(group), rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
        if (rows < 1 || cols < 1)
            throw dimension_error("matrix dimensions must be >= 1");
    }

    // Row-major construction from raw values; values are canonicalized.
    DenseMatrix(Group group, int rows, int cols, std::vector<std::int64_t> values)
        : DenseMatrix(group, rows, cols) {
        if (values.size() != entries_.size())
            throw dimension_error("entry count does not match dimensions");
        for (std::size_t i = 0; i < values.size(); ++i)
            entries_[i] = group_.canon(values[i]);
    }

    DenseMatrix(Group group, std::initializer_list<std::initializer_list<std::int64_t>> rows)
        : DenseMatrix(group, static_cast<int>(rows.size()),
                      rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != cols_)
                throw dimension_error("ragged initializer");
            int j = 0;
            for (std::int64_t v : row)
                set(i, j++, v);
            ++i;
        }
    }

    const Group& group() const { return group_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Scalar at(int i, int j) const { return {group_, (*this)(i, j)}; }

    void set(int i, int j, std::int64_t v) {
        entries_[static_cast<std::size_t>(i) * cols_ + j] = group_.canon(v);
    }

    const std::vector<std::int64_t>& data() const { return entries_; }
    std::vector<std::int64_t>& data() { return entries_; }

    bool is_zero() const {
        for (std::int64_t v : entries_)
            if (v != 0)
                return false;
        return true;
    }

    bool operator==(const DenseMatrix& o) const = default;

  private:
    Group group_;
    int rows_, cols_;
    std::vector<std::int64_t> entries_;
};

// m x n matrix over G together with blank cells (unspecified entries).
class PartialMatrix {
  public:
    PartialMatrix(Group group, int rows, int cols)
        : group_(group), rows_(rows), cols_(cols),
          values_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0),
          specified_(values_.size(), false) {
        if (rows < 1 || cols < 1)
            throw dimension_error("matrix dimensions must be >= 1");
    }

    static PartialMatrix from_dense(const DenseMatrix& d) {
        PartialMatrix p(d.group(), d.rows(), d.cols());
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
                p.set(i, j, d(i, j));
        return p;
    }

    const Group& group() const { return group_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool specified(int i, int j) const { return specified_[idx(i, j)]; }
    bool blank(int i, int j) const { return !specified_[idx(i, j)]; }

    std::int64_t operator()(int i, int j) const { return values_[idx(i, j)]; }

    std::optional<std::int64_t> get(int i, int j) const {
        if (!specified(i, j))
            return std::nullopt;
        return values_[idx(i, j)];
    }

    void set(int i, int j, std::int64_t v) {
        values_[idx(i, j)] = group_.canon(v);
        specified_[idx(i, j)] = true;
    }

    void clear(int i, int j) {
        values_[idx(i, j)] = 0;
        specified_[idx(i, j)] = false;
    }

    int specified_count() const {
        int n = 0;
        for (bool b : specified_)
            n += b;
        return n;
    }

    int blank_count() const { return rows_ * cols_ - specified_count(); }

    // Conversion to DenseMatrix; requires zero blanks.
    DenseMatrix to_dense() const {
        if (blank_count() > 0)
            throw error("partial matrix has blank cells");
        DenseMatrix d(group_, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                d.set(i, j, (*this)(i, j));
        return d;
    }

    // True iff d agrees with every specified cell.
    bool extended_by(const DenseMatrix& d) const {
        if (d.rows() != rows_ || d.cols() != cols_ || !(d.group() == group_))
            return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (specified(i, j) && d(i, j) != (*this)(i, j))
                    return false;
        return true;
    }

    bool operator==(const PartialMatrix& o) const = default;

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    Group group_;
    int rows_, cols_;
    std::vector<std::int64_t> values_;
    std::vector<bool> specified_; // per-cell: value present vs blank
};

// Partial-sum convention: result is blank wherever a is blank. b is total.
inline PartialMatrix subtract_dense(const PartialMatrix& a, const DenseMatrix& b) {
    require_same_group(a.group(), b.group());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("dimension mismatch in partial subtraction");
    PartialMatrix out(a.group(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.specified(i, j))
                out.set(i, j, a.group().sub(a(i, j), b(i, j)));
    return out;
}

inline DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_group(a.group(), b.group());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("dimension mismatch in matrix addition");
    DenseMatrix out(a.group(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.data().size(); ++i)
        out.data()[i] = a.group().add(a.data()[i], b.data()[i]);
    return out;
}

inline DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_group(a.group(), b.group());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("dimension mismatch in matrix subtraction");
    DenseMatrix out(a.group(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.data().size(); ++i)
        out.data()[i] = a.group().sub(a.data()[i], b.data()[i]);
    return out;
}

} // namespace csum
