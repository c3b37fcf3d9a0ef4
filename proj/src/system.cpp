#include "leonard/system.hpp"

#include <utility>

namespace leonard {

BipartiteSystem::BipartiteSystem(int d, std::vector<Scalar> b, std::vector<Scalar> c,
                                 std::vector<Scalar> theta_star, FieldSpec field)
    : d_(d), field_(field), b_(std::move(b)), c_(std::move(c)),
      theta_star_(std::move(theta_star)) {}

BipartiteSystem BipartiteSystem::build(int d, std::vector<Scalar> b, std::vector<Scalar> c,
                                       std::vector<Scalar> theta_star, const FieldSpec& field) {
    if (d < 1)
        throw PreconditionError("system diameter d must be at least 1");
    if (b.size() != static_cast<size_t>(d))
        throw PreconditionError("superdiagonal must have exactly d entries");
    if (c.size() != static_cast<size_t>(d))
        throw PreconditionError("subdiagonal must have exactly d entries");
    if (theta_star.size() != static_cast<size_t>(d) + 1)
        throw PreconditionError("theta* must have exactly d+1 entries");
    for (size_t i = 0; i < b.size(); ++i) {
        if (!(b[i].field() == field) || !(c[i].field() == field))
            throw PreconditionError("diagonal entries must belong to the system field");
        if (b[i].is_zero())
            throw PreconditionError("zero superdiagonal entry b_" + std::to_string(i) +
                                    " violates irreducibility");
        if (c[i].is_zero())
            throw PreconditionError("zero subdiagonal entry c_" + std::to_string(i + 1) +
                                    " violates irreducibility");
    }
    for (const Scalar& t : theta_star)
        if (!(t.field() == field))
            throw PreconditionError("theta* entries must belong to the system field");
    return BipartiteSystem(d, std::move(b), std::move(c), std::move(theta_star), field);
}

Scalar BipartiteSystem::b_at(int i) const {
    if (i < 0 || i > d_)
        throw PreconditionError("b index out of range");
    if (i == d_)
        return Scalar::zero(field_);
    return b_[static_cast<size_t>(i)];
}

Scalar BipartiteSystem::c_at(int i) const {
    if (i < 0 || i > d_)
        throw PreconditionError("c index out of range");
    if (i == 0)
        return Scalar::zero(field_);
    return c_[static_cast<size_t>(i) - 1];
}

Matrix BipartiteSystem::a_matrix() const {
    Matrix a(d_ + 1, d_ + 1, field_);
    for (int i = 0; i < d_; ++i) {
        a.set(i, i + 1, b_at(i));
        a.set(i + 1, i, c_at(i + 1));
    }
    return a;
}

Matrix BipartiteSystem::a_star_matrix() const { return Matrix::diagonal(theta_star_); }

std::vector<Scalar> BipartiteSystem::intersection_numbers() const {
    return std::vector<Scalar>(static_cast<size_t>(d_) + 1, Scalar::zero(field_));
}

BipartiteSystem BipartiteSystem::rescale_basis(const std::vector<Scalar>& beta) const {
    if (beta.size() != static_cast<size_t>(d_))
        throw PreconditionError("rescale needs exactly d factors");
    for (size_t i = 0; i < beta.size(); ++i) {
        if (!(beta[i].field() == field_))
            throw PreconditionError("rescale factors must belong to the system field");
        if (beta[i].is_zero())
            throw PreconditionError("rescale factor beta_" + std::to_string(i) + " is zero");
    }
    // New subdiagonal keeps the invariant products: c'_i = b_{i-1} c_i / beta_{i-1}.
    std::vector<Scalar> c2;
    c2.reserve(static_cast<size_t>(d_));
    for (int i = 1; i <= d_; ++i)
        c2.push_back(b_at(i - 1) * c_at(i) / beta[static_cast<size_t>(i) - 1]);
    return BipartiteSystem(d_, beta, std::move(c2), theta_star_, field_);
}

BipartiteSystem BipartiteSystem::normalize_basis() const {
    return rescale_basis(std::vector<Scalar>(static_cast<size_t>(d_), Scalar::one(field_)));
}

bool BipartiteSystem::operator==(const BipartiteSystem& o) const {
    return d_ == o.d_ && field_ == o.field_ && b_ == o.b_ && c_ == o.c_ &&
           theta_star_ == o.theta_star_;
}

} // namespace leonard
