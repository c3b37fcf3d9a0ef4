// Shared helpers for the test suites: deterministic random scalars, a naive
// matrix inverse, the test corpus, and the frozen rank-1 idempotents of the
// d = 3 standard instance.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "leonard/characterize.hpp"
#include "leonard/families.hpp"
#include "leonard/matrix.hpp"
#include "leonard/spectral.hpp"

namespace testsupport {

using namespace leonard;

inline Scalar q(long num, long den = 1) {
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar::from_mpq(v, FieldSpec::rational());
}

inline std::vector<Scalar> qvec(const std::vector<long>& xs) {
    std::vector<Scalar> out;
    for (long x : xs)
        out.push_back(q(x));
    return out;
}

/// Deterministic nonzero rational with small numerator and denominator.
inline Scalar random_rational(std::mt19937_64& rng, bool nonzero = false) {
    long num = static_cast<long>(rng() % 19) - 9;
    if (nonzero && num == 0)
        num = 1;
    long den = 1 + static_cast<long>(rng() % 9);
    return q(num, den);
}

inline Scalar random_in_field(std::mt19937_64& rng, const FieldSpec& f, bool nonzero = false) {
    if (!f.is_prime_field())
        return random_rational(rng, nonzero);
    unsigned long p = f.p();
    unsigned long v = rng() % (nonzero ? p - 1 : p);
    if (nonzero)
        ++v;
    return Scalar::from_integer(static_cast<long>(v), f);
}

/// Gauss-Jordan inverse over the exact field; used only as a test oracle.
inline Matrix invert(const Matrix& x) {
    const int n = x.rows();
    Matrix a = x;
    Matrix inv = Matrix::identity(n, x.field());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        REQUIRE(piv >= 0);
        for (int j = 0; j < n; ++j) {
            Scalar t = a.at(piv, j);
            a.set(piv, j, a.at(col, j));
            a.set(col, j, t);
            t = inv.at(piv, j);
            inv.set(piv, j, inv.at(col, j));
            inv.set(col, j, t);
        }
        Scalar s = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.set(col, j, a.at(col, j) * s);
            inv.set(col, j, inv.at(col, j) * s);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero())
                continue;
            Scalar f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.set(i, j, a.at(i, j) - f * a.at(col, j));
                inv.set(i, j, inv.at(i, j) - f * inv.at(col, j));
            }
        }
    }
    return inv;
}

/// The d = 3 standard instance over the rationals.
inline BipartiteSystem kraw3() { return krawtchouk(3, FieldSpec::rational()); }

/// Frozen rank-1 idempotents of kraw3: E(theta) = v w^T / (w^T v) with the
/// right/left eigenvector pairs computed by hand from the recurrences.
inline std::vector<Matrix> kraw3_idempotents_oracle() {
    // theta:            3            1              -1             -3
    // right v:    (1,1,1,1)  (1,1/3,-1/3,-1)  (1,-1/3,-1/3,1)  (1,-1,1,-1)
    // left  w:    (1,3,3,1)  (1, 1, -1, -1)   (1, -1, -1, 1)   (1,-3,3,-1)
    auto e = [](std::vector<Scalar> v, std::vector<Scalar> w) {
        Scalar dot = Scalar::zero(FieldSpec::rational());
        for (size_t i = 0; i < v.size(); ++i)
            dot = dot + v[i] * w[i];
        return Matrix::outer(v, w).scaled(dot.inverse());
    };
    std::vector<Matrix> out;
    out.push_back(e(qvec({1, 1, 1, 1}), qvec({1, 3, 3, 1})));
    out.push_back(e({q(1), q(1, 3), q(-1, 3), q(-1)}, qvec({1, 1, -1, -1})));
    out.push_back(e({q(1), q(-1, 3), q(-1, 3), q(1)}, qvec({1, -1, -1, 1})));
    out.push_back(e(qvec({1, -1, 1, -1}), qvec({1, -3, 3, -1})));
    return out;
}

struct Corpus {
    std::vector<BipartiteSystem> rational;  // krawtchouk d = 1..8
    std::vector<BipartiteSystem> random_gf; // eigendecomposable random prime-field systems
};

/// Deterministic corpus: the rational family plus `count` random GF(p)
/// systems over p in {7, 11, 13}, d in {2, 3, 4}, kept only when they
/// eigendecompose. Round-robin over the (p, d) combinations.
inline Corpus build_corpus(int count = 200) {
    Corpus corpus;
    for (int d = 1; d <= 8; ++d)
        corpus.rational.push_back(krawtchouk(d, FieldSpec::rational()));

    const unsigned long primes[] = {7, 11, 13};
    const int dims[] = {2, 3, 4};
    std::uint64_t seed = 1;
    size_t combo = 0;
    while (static_cast<int>(corpus.random_gf.size()) < count) {
        unsigned long p = primes[combo % 3];
        int d = dims[(combo / 3) % 3];
        ++combo;
        BipartiteSystem sys = random_system(d, FieldSpec::prime(p), seed++);
        try {
            eigendecompose(sys);
        } catch (const NotMultiplicityFreeError&) {
            continue;
        }
        corpus.random_gf.push_back(sys);
    }
    return corpus;
}

} // namespace testsupport
