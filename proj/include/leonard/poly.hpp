#pragma once

#include <string>
#include <vector>

#include "leonard/system.hpp"

namespace leonard {

/// Polynomial with exact coefficients; coeffs()[k] is the coefficient of
/// lambda^k, the top coefficient is nonzero, and the zero polynomial has an
/// empty coefficient list.
class Poly {
public:
    explicit Poly(const FieldSpec& f); // zero polynomial

    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, int degree);
    static Poly from_coeffs(std::vector<Scalar> coeffs, const FieldSpec& f);
    /// lambda - r
    static Poly linear_root(const Scalar& r);

    const FieldSpec& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    Scalar coeff(int k) const; // zero beyond the degree

    Scalar eval(const Scalar& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& k) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Exact quotient by (lambda - root); the remainder must vanish.
    Poly deflated(const Scalar& root) const;

    std::string str() const;

private:
    void trim();

    FieldSpec field_;
    std::vector<Scalar> c_;
};

struct RootMult {
    Scalar root;
    int multiplicity;
};

/// All roots of f lying in its coefficient field, with exact multiplicities
/// obtained by deflation. Rationals are found through the divisor candidates
/// of the cleared-denominator constant and leading coefficients; GF(p) roots
/// by exhaustive evaluation. Rational output is sorted descending by value,
/// GF(p) output ascending by representative.
std::vector<RootMult> roots_in_field(const Poly& f);

/// The u_i polynomials of the three-term recurrence of the system, for
/// 0 <= i <= d+1. u_0 = 1, deg u_i = i, and the top entry u_{d+1} is monic.
std::vector<Poly> u_sequence(const BipartiteSystem& sys);

/// The monic counterparts p_i = (b_0...b_{i-1}) u_i, with p_{d+1} = u_{d+1};
/// identical to the u sequence of the normalized basis.
std::vector<Poly> p_sequence(const BipartiteSystem& sys);

/// u_{d+1}: the characteristic polynomial of A, monic of degree d+1.
Poly char_poly(const BipartiteSystem& sys);

/// det(lambda I - X) of a square matrix by Laplace expansion with memoized
/// minors. Independent of the recurrence route above.
Poly char_poly(const Matrix& x);

/// Cosine sequence for an eigenvalue theta: alpha_i = u_i(theta), alpha_0 = 1.
struct CosineSeq {
    Scalar theta;
    std::vector<Scalar> alpha; // size d+1
};

/// Runs the recurrence directly rather than evaluating stored polynomials.
/// theta must be a root of the characteristic polynomial.
CosineSeq cosine_sequence(const BipartiteSystem& sys, const Scalar& theta);

bool is_eigenvalue(const BipartiteSystem& sys, const Scalar& theta);

} // namespace leonard
