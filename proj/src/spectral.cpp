#include "leonard/spectral.hpp"

#include <utility>

namespace leonard {

namespace {

std::optional<std::pair<Scalar, Scalar>> compute_dual_products(const std::vector<Matrix>& E,
                                                               const Matrix& a_star) {
    if (E.size() < 3)
        return std::nullopt;
    Matrix e0_sandwich = E[0] * a_star * E[1];
    Matrix e1_sandwich = E[1] * a_star * E[2];
    if (e0_sandwich.is_zero() || e1_sandwich.is_zero())
        return std::nullopt;
    return std::make_pair((e0_sandwich * a_star).trace(), (e1_sandwich * a_star).trace());
}

} // namespace

SpectralData eigendecompose(const BipartiteSystem& sys) {
    const int n = sys.d() + 1;
    const FieldSpec f = sys.field();
    Poly cp = char_poly(sys);
    std::vector<RootMult> roots = roots_in_field(cp);
    int distinct = static_cast<int>(roots.size());
    for (const RootMult& r : roots)
        if (r.multiplicity > 1)
            throw NotMultiplicityFreeError("repeated eigenvalue " + r.root.str() + " over " +
                                           f.describe());
    if (distinct != n)
        throw NotMultiplicityFreeError("only " + std::to_string(distinct) + " of " +
                                       std::to_string(n) + " eigenvalues lie in " + f.describe());

    SpectralData sp;
    sp.theta.reserve(roots.size());
    for (const RootMult& r : roots)
        sp.theta.push_back(r.root);

    const Matrix a = sys.a_matrix();
    const Matrix id = Matrix::identity(n, f);
    sp.E.reserve(roots.size());
    for (int i = 0; i < n; ++i) {
        Matrix e = id;
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            e = (a - id.scaled(sp.theta[j])).scaled((sp.theta[i] - sp.theta[j]).inverse()) * e;
        }
        sp.E.push_back(std::move(e));
    }

    IdempotentSystemVerdict verdict = is_idempotent_system(sp.E);
    if (!verdict.ok)
        throw InternalError("primitive idempotents are inconsistent: " + verdict.detail);

    sp.a_star = dual_a(sp, sys);
    sp.dual_products = compute_dual_products(sp.E, sys.a_star_matrix());
    return sp;
}

std::vector<Scalar> dual_a(const SpectralData& sp, const BipartiteSystem& sys) {
    const Matrix a_star = sys.a_star_matrix();
    std::vector<Scalar> out;
    out.reserve(sp.E.size());
    for (size_t i = 0; i < sp.E.size(); ++i) {
        Scalar ai = (sp.E[i] * a_star).trace();
        if (!(sp.E[i] * a_star * sp.E[i] == sp.E[i].scaled(ai)))
            throw InternalError("E_i A* E_i != a*_i E_i at i = " + std::to_string(i));
        out.push_back(std::move(ai));
    }
    return out;
}

Scalar dual_product_trace(const SpectralData& sp, const BipartiteSystem& sys, int i, int j) {
    const int n = static_cast<int>(sp.E.size());
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw PreconditionError("idempotent index out of range");
    const Matrix a_star = sys.a_star_matrix();
    return (sp.E[static_cast<size_t>(i)] * a_star * sp.E[static_cast<size_t>(j)] * a_star).trace();
}

SpectralData reorder(const SpectralData& sp, const std::vector<int>& perm,
                     const BipartiteSystem& sys) {
    const size_t n = sp.theta.size();
    if (perm.size() != n)
        throw PreconditionError("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (int k : perm) {
        if (k < 0 || static_cast<size_t>(k) >= n || seen[static_cast<size_t>(k)])
            throw PreconditionError("not a permutation of the eigenvalue indices");
        seen[static_cast<size_t>(k)] = true;
    }
    SpectralData out;
    out.theta.reserve(n);
    out.E.reserve(n);
    out.a_star.reserve(n);
    for (int k : perm) {
        out.theta.push_back(sp.theta[static_cast<size_t>(k)]);
        out.E.push_back(sp.E[static_cast<size_t>(k)]);
        out.a_star.push_back(sp.a_star[static_cast<size_t>(k)]);
    }
    out.dual_products = compute_dual_products(out.E, sys.a_star_matrix());
    return out;
}

BipartiteSystem row_sum_basis(const BipartiteSystem& sys, const Scalar& theta) {
    CosineSeq cos = cosine_sequence(sys, theta); // rejects non-eigenvalues
    const int d = sys.d();
    for (int i = 0; i <= d; ++i)
        if (cos.alpha[static_cast<size_t>(i)].is_zero())
            throw PreconditionError("theta = " + theta.str() +
                                    " is not normalizing: cosine vanishes at index " +
                                    std::to_string(i));
    std::vector<Scalar> b2, c2;
    b2.reserve(static_cast<size_t>(d));
    c2.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        b2.push_back(sys.b_at(i) * cos.alpha[static_cast<size_t>(i) + 1] /
                     cos.alpha[static_cast<size_t>(i)]);
    for (int i = 1; i <= d; ++i)
        c2.push_back(sys.c_at(i) * cos.alpha[static_cast<size_t>(i) - 1] /
                     cos.alpha[static_cast<size_t>(i)]);
    BipartiteSystem out =
        BipartiteSystem::build(d, std::move(b2), std::move(c2), sys.theta_star(), sys.field());
    for (int i = 0; i <= d; ++i) {
        Scalar row_sum = out.c_at(i) + out.b_at(i);
        if (!(row_sum == theta))
            throw InternalError("row sum " + row_sum.str() + " differs from theta at row " +
                                std::to_string(i));
    }
    return out;
}

} // namespace leonard
