#include <vertexforge/graded.hpp>
#include <vertexforge/linalg.hpp>

#include <random>

#include "vendor_doctest.hpp"

using namespace vertexforge;

namespace {

// independent oracle: fraction-free (Bareiss) elimination rank
std::size_t bareiss_rank(Matrix m) {
    std::size_t nrows = m.size(), ncols = nrows ? m[0].size() : 0;
    // scale rows to integer matrices first
    for (auto& row : m) {
        mpz_class lcm = 1;
        for (auto& v : row) lcm = lcm / gcd(lcm, v.get_den()) * v.get_den();
        for (auto& v : row) v *= Rational(lcm);
    }
    std::size_t rank = 0;
    Rational prev(1);
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t sel = rank;
        while (sel < nrows && is_zero(m[sel][col])) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[rank]);
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            for (std::size_t c = col + 1; c < ncols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = Rational(0);
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("rref basics") {
    Matrix id3 = {{Rational(1), Rational(0), Rational(0)},
                  {Rational(0), Rational(1), Rational(0)},
                  {Rational(0), Rational(0), Rational(1)}};
    CHECK(rref(id3).rank == 3);

    Matrix m = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == Rational(-2));
    CHECK(ker[0][1] == Rational(1));

    auto sol = solve_linear({{Rational(2), Rational(0)}, {Rational(0), Rational(4)}},
                            {Rational(6), Rational(8)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(3));
    CHECK((*sol)[1] == Rational(2));
    CHECK_FALSE(solve_linear({{Rational(1)}, {Rational(1)}}, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("rref rank agrees with fraction-free oracle on random matrices") {
    std::mt19937 gen(98765);
    std::uniform_int_distribution<long> d(-6, 6), den(1, 4);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix m(20, std::vector<Rational>(20));
        for (auto& row : m)
            for (auto& v : row) v = rat(d(gen), den(gen));
        // plant some dependencies
        m[7] = m[3];
        for (std::size_t c = 0; c < 20; ++c) m[11][c] = m[2][c] * Rational(3) - m[5][c];
        CHECK(rref(m).rank == bareiss_rank(m));
    }
}

TEST_CASE("rref is row-permutation invariant") {
    std::mt19937 gen(4242);
    std::uniform_int_distribution<long> d(-5, 5);
    Matrix m(8, std::vector<Rational>(6));
    for (auto& row : m)
        for (auto& v : row) v = Rational(d(gen));
    RrefResult base = rref(m);
    std::shuffle(m.begin(), m.end(), gen);
    RrefResult shuf = rref(m);
    CHECK(base.rank == shuf.rank);
    // same row space: reduced forms coincide
    for (std::size_t i = 0; i < base.rank; ++i) CHECK(base.reduced[i] == shuf.reduced[i]);
}

TEST_CASE("row reducer canonical forms are idempotent and linear") {
    RowReducer red;
    ModVec r1;
    r1.c = {{3, Rational(1)}, {1, Rational(-1)}};
    ModVec r2;
    r2.c = {{2, Rational(2)}, {0, Rational(2)}};
    CHECK(red.add_row(r1));
    CHECK(red.add_row(r2));
    CHECK_FALSE(red.add_row(mv_scale(r1, Rational(5))));

    ModVec v;
    v.c = {{3, Rational(2)}, {2, Rational(1)}};
    ModVec once = red.reduce(v);
    CHECK(once == red.reduce(once));
    ModVec w;
    w.c = {{3, Rational(-1)}};
    ModVec lin = red.reduce(mv_add(v, w));
    CHECK(lin == mv_add(red.reduce(v), red.reduce(w)));
}

TEST_CASE("graded quotient dims: spanning counts and simple identification") {
    // 3 labels at degrees 0,1,1; identify the two degree-1 labels
    GradedQuotient q({0, 1, 1}, 2);
    auto dims0 = q.dims();
    CHECK(dims0[0] == 1);
    CHECK(dims0[1] == 2);
    ModVec rel;
    rel.c = {{1, Rational(1)}, {2, Rational(-1)}};
    q.add_relation(rel);
    auto dims1 = q.dims();
    CHECK(dims1[0] == 1);
    CHECK(dims1[1] == 1);
    CHECK(q.basis() == std::vector<std::int32_t>{0, 1});
}

TEST_CASE("quotient dims are monotone under added relations") {
    std::mt19937 gen(777);
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<int> degs = {0, 1, 1, 2, 2, 2, 3, 3, 3, 3};
    GradedQuotient q(degs, 3);
    std::vector<std::int64_t> prev_f(4);
    auto filt = [&](const std::vector<std::int64_t>& dims) {
        std::vector<std::int64_t> f(dims.size());
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) f[i] = (acc += dims[i]);
        return f;
    };
    prev_f = filt(q.dims());
    for (int t = 0; t < 8; ++t) {
        ModVec r;
        for (int j = 0; j < 3; ++j) r.c[static_cast<std::int32_t>(gen() % degs.size())] = Rational(d(gen));
        for (auto it = r.c.begin(); it != r.c.end();)
            it = is_zero(it->second) ? r.c.erase(it) : std::next(it);
        q.add_relation(r);
        auto f = filt(q.dims());
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] <= prev_f[i]);
        prev_f = f;
    }
}
