#pragma once

#include <vector>

#include "leonard/matrix.hpp"
#include "leonard/scalar.hpp"

namespace leonard {

/// The pair (A, A*) in a feasible basis: A is irreducible tridiagonal with
/// zero diagonal, superdiagonal b_0..b_{d-1} and subdiagonal c_1..c_d; A* is
/// diag(theta*_0..theta*_d). By convention b_d = 0 and c_0 = 0.
class BipartiteSystem {
public:
    static BipartiteSystem build(int d, std::vector<Scalar> b, std::vector<Scalar> c,
                                 std::vector<Scalar> theta_star, const FieldSpec& field);

    int d() const { return d_; }
    const FieldSpec& field() const { return field_; }

    /// b_i for 0 <= i <= d (b_d = 0 by convention).
    Scalar b_at(int i) const;
    /// c_i for 0 <= i <= d (c_0 = 0 by convention).
    Scalar c_at(int i) const;

    const std::vector<Scalar>& b() const { return b_; }          // size d
    const std::vector<Scalar>& c() const { return c_; }          // c()[i] is c_{i+1}
    const std::vector<Scalar>& theta_star() const { return theta_star_; } // size d+1

    Matrix a_matrix() const;
    Matrix a_star_matrix() const;

    /// The trace scalars a_i = diagonal of A in the feasible basis; all zero
    /// here by construction.
    std::vector<Scalar> intersection_numbers() const;

    /// Feasible-basis change making the superdiagonal equal to beta. The
    /// products b_{i-1} c_i, the spectrum and theta* are unchanged.
    BipartiteSystem rescale_basis(const std::vector<Scalar>& beta) const;

    /// The basis with all superdiagonal entries equal to 1.
    BipartiteSystem normalize_basis() const;

    bool operator==(const BipartiteSystem& o) const;

private:
    BipartiteSystem(int d, std::vector<Scalar> b, std::vector<Scalar> c,
                    std::vector<Scalar> theta_star, FieldSpec field);

    int d_;
    FieldSpec field_;
    std::vector<Scalar> b_;          // b_0..b_{d-1}
    std::vector<Scalar> c_;          // c_1..c_d, stored shifted by one
    std::vector<Scalar> theta_star_; // theta*_0..theta*_d
};

} // namespace leonard
