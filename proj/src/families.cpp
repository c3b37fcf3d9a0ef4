#include "leonard/families.hpp"

#include <random>
#include <utility>

namespace leonard {

BipartiteSystem krawtchouk(int d, const FieldSpec& field) {
    if (d < 1)
        throw PreconditionError("krawtchouk needs d >= 1");
    if (field.is_prime_field()) {
        if (field.p() <= static_cast<unsigned long>(d))
            throw PreconditionError("field too small: an off-diagonal entry vanishes mod " +
                                    std::to_string(field.p()));
        // The spectrum is {d - 2i}; idempotent denominators are its pairwise
        // differences, so collisions mod p make the field unusable.
        for (int i = 0; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                if (Scalar::from_integer(d - 2 * i, field) ==
                    Scalar::from_integer(d - 2 * j, field))
                    throw PreconditionError(
                        "field too small: eigenvalue denominator vanishes mod " +
                        std::to_string(field.p()));
    }
    std::vector<Scalar> b, c, ts;
    for (int i = 0; i < d; ++i)
        b.push_back(Scalar::from_integer(d - i, field));
    for (int i = 1; i <= d; ++i)
        c.push_back(Scalar::from_integer(i, field));
    for (int i = 0; i <= d; ++i)
        ts.push_back(Scalar::from_integer(d - 2 * i, field));
    return BipartiteSystem::build(d, std::move(b), std::move(c), std::move(ts), field);
}

namespace {

void require_perm(const std::vector<int>& perm, size_t n) {
    if (perm.size() != n)
        throw PreconditionError("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (int k : perm) {
        if (k < 0 || static_cast<size_t>(k) >= n || seen[static_cast<size_t>(k)])
            throw PreconditionError("not a permutation");
        seen[static_cast<size_t>(k)] = true;
    }
}

struct MutationVisitor {
    const BipartiteSystem& sys;

    BipartiteSystem operator()(const DuplicateThetaStar& m) const {
        const int n = sys.d() + 1;
        if (m.src < 0 || m.src >= n || m.dst < 0 || m.dst >= n || m.src == m.dst)
            throw PreconditionError("duplicate mutation needs two distinct valid indices");
        std::vector<Scalar> ts = sys.theta_star();
        ts[static_cast<size_t>(m.dst)] = ts[static_cast<size_t>(m.src)];
        return BipartiteSystem::build(sys.d(), sys.b(), sys.c(), std::move(ts), sys.field());
    }

    BipartiteSystem operator()(const PermuteThetaStar& m) const {
        require_perm(m.perm, sys.theta_star().size());
        std::vector<Scalar> ts;
        ts.reserve(m.perm.size());
        for (int k : m.perm)
            ts.push_back(sys.theta_star()[static_cast<size_t>(k)]);
        return BipartiteSystem::build(sys.d(), sys.b(), sys.c(), std::move(ts), sys.field());
    }

    BipartiteSystem operator()(const AffineThetaStar& m) const {
        if (m.s.is_zero())
            throw PreconditionError("affine mutation needs s != 0");
        std::vector<Scalar> ts;
        ts.reserve(sys.theta_star().size());
        for (const Scalar& t : sys.theta_star())
            ts.push_back(m.s * t + m.t);
        return BipartiteSystem::build(sys.d(), sys.b(), sys.c(), std::move(ts), sys.field());
    }

    BipartiteSystem operator()(const RescaleBasisMutation& m) const {
        return sys.rescale_basis(m.beta);
    }

    BipartiteSystem operator()(const ShuffleEigenOrder& m) const {
        require_perm(m.perm, sys.theta_star().size());
        return sys; // labels live in the spectral data, not in the system
    }
};

} // namespace

BipartiteSystem apply_mutation(const BipartiteSystem& sys, const Mutation& m) {
    return std::visit(MutationVisitor{sys}, m);
}

BipartiteSystem random_system(int d, const FieldSpec& field, std::uint64_t seed) {
    if (!field.is_prime_field())
        throw PreconditionError("random systems are generated over prime fields only");
    if (d < 1)
        throw PreconditionError("random system needs d >= 1");
    const unsigned long p = field.p();

    std::mt19937_64 rng(seed);
    auto draw = [&rng](unsigned long lo, unsigned long hi) {
        return lo + static_cast<unsigned long>(rng() % (hi - lo + 1));
    };

    std::vector<Scalar> b, c;
    for (int i = 0; i < d; ++i) {
        b.push_back(Scalar::from_integer(static_cast<long>(draw(1, p - 1)), field));
        c.push_back(Scalar::from_integer(static_cast<long>(draw(1, p - 1)), field));
    }

    std::vector<Scalar> ts;
    const int budget = 64 * (d + 1);
    int used = 0;
    while (static_cast<int>(ts.size()) < d + 1) {
        if (++used > budget)
            throw PreconditionError("retry budget exhausted: GF(" + std::to_string(p) +
                                    ") cannot supply " + std::to_string(d + 1) +
                                    " distinct theta*");
        Scalar v = Scalar::from_integer(static_cast<long>(draw(0, p - 1)), field);
        bool fresh = true;
        for (const Scalar& t : ts)
            fresh = fresh && !(t == v);
        if (fresh)
            ts.push_back(v);
    }
    return BipartiteSystem::build(d, std::move(b), std::move(c), std::move(ts), field);
}

} // namespace leonard
