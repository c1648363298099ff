#include "confsphere/matrix.hpp"

#include <algorithm>

namespace confsphere {

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

ReduceResult reduce(const ExactMatrix& m) {
    ExactMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    ReduceResult res(rows, cols, m.field());
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a.at(pr, c).is_zero())
            ++pr;
        if (pr == rows)
            continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a.at(pr, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!a.at(r, j).is_zero())
                a.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero())
                continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                const Scalar& piv = a.at(r, j);
                if (!piv.is_zero())
                    a.at(i, j) -= f * piv;
            }
        }
        res.pivot_columns.push_back(c);
        ++r;
    }
    res.rank = res.pivot_columns.size();
    res.rref = a;

    // Kernel: one vector per free column j, with -RREF entries at the pivots.
    std::vector<long> pivot_row_of(cols, -1);
    for (std::size_t k = 0; k < res.pivot_columns.size(); ++k)
        pivot_row_of[res.pivot_columns[k]] = (long)k;
    for (std::size_t j = 0; j < cols; ++j) {
        if (pivot_row_of[j] >= 0)
            continue;
        std::vector<Scalar> v(cols, Scalar::zero(m.field()));
        v[j] = Scalar::one(m.field());
        for (std::size_t k = 0; k < res.pivot_columns.size(); ++k)
            v[res.pivot_columns[k]] = -a.at(k, j);
        res.kernel_basis.push_back(std::move(v));
    }
    return res;
}

std::vector<std::size_t> cokernel_representatives(const ExactMatrix& m) {
    ReduceResult t = reduce(m.transposed());
    std::vector<bool> is_pivot(m.rows(), false);
    for (std::size_t c : t.pivot_columns)
        is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!is_pivot[r])
            out.push_back(r);
    return out;
}

}  // namespace confsphere
