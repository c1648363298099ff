#include "confsphere/matrix.hpp"

#include <doctest.h>

#include <cstdint>

using namespace confsphere;

namespace {

ExactMatrix from_rows(const FieldSpec& f, std::vector<std::vector<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    ExactMatrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = Scalar::from_long(rows[i][j], f);
    return m;
}

// xorshift, fixed seed: the suite is deterministic
struct Rng {
    std::uint64_t s = 0x243f6a8885a308d3ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long pick(long lo, long hi) { return lo + (long)(next() % (std::uint64_t)(hi - lo + 1)); }
};

}  // namespace

TEST_CASE("identity over F3 has full rank and no kernel") {
    FieldSpec f(3);
    auto m = from_rows(f, {{1, 0}, {0, 1}});
    ReduceResult r = reduce(m);
    CHECK(r.rank == 2);
    CHECK(r.kernel_basis.empty());
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("(1 1) over F2 has the forced null space") {
    FieldSpec f(2);
    auto m = from_rows(f, {{1, 1}});
    ReduceResult r = reduce(m);
    CHECK(r.rank == 1);
    REQUIRE(r.kernel_basis.size() == 1);
    CHECK(r.kernel_basis[0][0] == Scalar::one(f));
    CHECK(r.kernel_basis[0][1] == Scalar::one(f));
}

TEST_CASE("rank-1 rational matrix, kernel of size 2") {
    FieldSpec f(0);
    auto m = from_rows(f, {{1, 2, 3}, {2, 4, 6}});
    ReduceResult r = reduce(m);
    CHECK(r.rank == 1);
    REQUIRE(r.kernel_basis.size() == 2);
    // hand row reduction: (1 2 3), kernel (-2,1,0) and (-3,0,1)
    CHECK(r.kernel_basis[0][0] == Scalar::from_long(-2, f));
    CHECK(r.kernel_basis[0][1] == Scalar::one(f));
    CHECK(r.kernel_basis[1][0] == Scalar::from_long(-3, f));
    CHECK(r.kernel_basis[1][2] == Scalar::one(f));
}

TEST_CASE("cokernel representatives") {
    FieldSpec f(0);
    CHECK(cokernel_representatives(ExactMatrix(3, 2, f)) ==
          std::vector<std::size_t>{0, 1, 2});
    CHECK(cokernel_representatives(from_rows(f, {{1, 0}, {0, 1}})).empty());
}

TEST_CASE("rank-nullity, kernel correctness, idempotence on random matrices") {
    Rng rng;
    for (unsigned long p : {0ul, 2ul, 5ul}) {
        FieldSpec f(p);
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t rows = (std::size_t)rng.pick(0, 5);
            std::size_t cols = (std::size_t)rng.pick(0, 5);
            ExactMatrix m(rows, cols, f);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.at(i, j) = Scalar::from_long(rng.pick(-4, 4), f);
            ReduceResult r = reduce(m);
            CHECK(r.rank + r.kernel_basis.size() == cols);
            for (const auto& v : r.kernel_basis) {
                for (std::size_t i = 0; i < rows; ++i) {
                    Scalar acc = Scalar::zero(f);
                    for (std::size_t j = 0; j < cols; ++j)
                        acc += m.at(i, j) * v[j];
                    CHECK(acc.is_zero());
                }
            }
            ReduceResult again = reduce(r.rref);
            CHECK(again.rank == r.rank);
            CHECK(again.pivot_columns == r.pivot_columns);
        }
    }
}

TEST_CASE("exact rational arithmetic survives elimination blowup") {
    FieldSpec f(0);
    // Hilbert-like fragment: entries 1/(i+j+1)
    ExactMatrix m(4, 4, f);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m.at(i, j) = Scalar::one(f) / Scalar::from_long((long)(i + j + 1), f);
    CHECK(reduce(m).rank == 4);
}
