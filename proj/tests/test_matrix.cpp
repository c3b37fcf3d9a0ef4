#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace leonard;
using testsupport::kraw3;
using testsupport::kraw3_idempotents_oracle;
using testsupport::q;
using testsupport::qvec;
using testsupport::random_in_field;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, random_in_field(rng, f));
    return m;
}

// Plain rational elimination rank; the independent route against Bareiss.
int naive_rank(const Matrix& x) {
    Matrix a = x;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        for (int j = 0; j < a.cols(); ++j) {
            Scalar t = a.at(piv, j);
            a.set(piv, j, a.at(row, j));
            a.set(row, j, t);
        }
        for (int i = row + 1; i < a.rows(); ++i) {
            if (a.at(i, col).is_zero())
                continue;
            Scalar f = a.at(i, col) / a.at(row, col);
            for (int j = col; j < a.cols(); ++j)
                a.set(i, j, a.at(i, j) - f * a.at(row, j));
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("product with the identity and shape errors") {
    std::mt19937_64 rng(5);
    const FieldSpec Q = FieldSpec::rational();
    Matrix x = random_matrix(rng, 4, Q);
    CHECK(Matrix::identity(4, Q) * x == x);
    CHECK(x * Matrix::identity(4, Q) == x);
    CHECK_THROWS_AS(x * Matrix(3, 3, Q), PreconditionError);
    CHECK_THROWS_AS(x + Matrix(3, 4, Q), PreconditionError);
    CHECK_THROWS_AS(Matrix(0, 2, Q), PreconditionError);
    CHECK_THROWS_AS(x * Matrix(4, 4, FieldSpec::prime(5)), PreconditionError);
}

TEST_CASE("idempotent oracle products") {
    std::vector<Matrix> e = kraw3_idempotents_oracle();
    const FieldSpec Q = FieldSpec::rational();
    CHECK((e[0] * e[1]).is_zero());
    CHECK(e[0] * e[0] == e[0]);

    Matrix a = kraw3().a_matrix();
    // Sign conjugation of a zero-diagonal tridiagonal matrix negates it.
    Matrix d = Matrix::diagonal(qvec({1, -1, 1, -1}));
    CHECK(d * a * d == a.scaled(q(-1)));

    SUBCASE("system verdicts") {
        CHECK(is_idempotent_system(e).ok);

        std::vector<Matrix> bad{Matrix::identity(2, Q)};
        IdempotentSystemVerdict v = is_idempotent_system(bad);
        CHECK_FALSE(v.ok);
        CHECK(v.clause == "rank");

        std::vector<Matrix> dup{e[0], e[0]};
        v = is_idempotent_system(dup);
        CHECK_FALSE(v.ok);
        CHECK(v.clause == "product");
        CHECK(v.i == 0);
        CHECK(v.j == 1);
    }
}

TEST_CASE("trace") {
    const FieldSpec Q = FieldSpec::rational();
    CHECK(Matrix::identity(4, Q).trace() == q(4));
    CHECK(kraw3_idempotents_oracle()[0].trace() == q(1));
    CHECK(kraw3().a_matrix().trace() == q(0));
    CHECK_THROWS_AS(Matrix(2, 3, Q).trace(), PreconditionError);

    // Linearity and similarity invariance.
    std::mt19937_64 rng(17);
    for (int k = 0; k < 10; ++k) {
        Matrix x = random_matrix(rng, 4, Q);
        Matrix y = random_matrix(rng, 4, Q);
        CHECK((x + y).trace() == x.trace() + y.trace());
        Matrix p = random_matrix(rng, 4, Q);
        if (p.rank() < 4)
            continue;
        CHECK((testsupport::invert(p) * x * p).trace() == x.trace());
    }
}

TEST_CASE("rank") {
    const FieldSpec Q = FieldSpec::rational();
    CHECK(Matrix(3, 3, Q).rank() == 0);
    CHECK(Matrix::identity(4, Q).rank() == 4);
    CHECK(kraw3_idempotents_oracle()[0].rank() == 1);

    SUBCASE("agrees with plain elimination on random matrices") {
        std::mt19937_64 rng(29);
        for (const FieldSpec& f : {Q, FieldSpec::prime(7)}) {
            for (int k = 0; k < 25; ++k) {
                Matrix x = random_matrix(rng, 4, f);
                if (k % 3 == 0) {
                    // Force rank deficiency: copy a row.
                    for (int j = 0; j < 4; ++j)
                        x.set(3, j, x.at(0, j));
                }
                if (k % 4 == 0) {
                    // Zero out a middle column so elimination has to skip it.
                    for (int i = 0; i < 4; ++i)
                        x.set(i, 1, Scalar::zero(f));
                }
                CHECK(x.rank() == naive_rank(x));
            }
        }
    }
}
