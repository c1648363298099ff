#ifndef CONFSPHERE_MATRIX_HPP
#define CONFSPHERE_MATRIX_HPP

#include "confsphere/field.hpp"

#include <cstddef>
#include <vector>

namespace confsphere {

/// Dense matrix of exact scalars over one field.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
        : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    ExactMatrix transposed() const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

struct ReduceResult {
    std::size_t rank = 0;
    // Null space vectors, each of length cols, ordered by their free column.
    std::vector<std::vector<Scalar>> kernel_basis;
    std::vector<std::size_t> pivot_columns;
    ExactMatrix rref;

    ReduceResult(std::size_t rows, std::size_t cols, const FieldSpec& f) : rref(rows, cols, f) {}
};

// Row-reduce to RREF with the fixed pivot rule: columns left to right, first
// nonzero entry top to bottom. Deterministic for a fixed input.
ReduceResult reduce(const ExactMatrix& m);

// Row indices of a canonical basis of codomain/image: reduce the transpose
// and keep the non-pivot rows. |result| = rows - rank.
std::vector<std::size_t> cokernel_representatives(const ExactMatrix& m);

}  // namespace confsphere

#endif
