#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "leonard/error.hpp"

namespace leonard {

enum class FieldKind { Rational, Prime };

/// Upper bound accepted for a prime-field modulus. Kept small by default so
/// that exhaustive root search over GF(p) stays cheap.
unsigned long prime_cap();
void set_prime_cap(unsigned long cap);

/// Identifies the ground field: the rationals, or GF(p) for a prime p.
class FieldSpec {
public:
    static FieldSpec rational();
    static FieldSpec prime(unsigned long p);

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::Prime; }
    unsigned long p() const;

    bool operator==(const FieldSpec&) const = default;
    std::string describe() const;

private:
    FieldSpec(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    unsigned long p_; // 0 when rational
};

/// An exact field element: a rational in lowest terms with positive
/// denominator, or the canonical representative in [0, p) of a prime-field
/// residue. Immutable value type; all arithmetic is exact.
class Scalar {
public:
    Scalar(); // rational zero

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_integer(long n, const FieldSpec& f);
    /// Canonicalizes v into the field (reduces fractions; maps integers into
    /// [0, p) for prime fields, rejecting non-integral values there).
    static Scalar from_mpq(mpq_class v, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    /// Canonical stored value; for prime fields the representative over 1.
    const mpq_class& value() const { return v_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order used for canonical listings: rationals by value,
    /// prime-field elements by representative. Requires equal fields.
    static int cmp(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    Scalar(FieldSpec f, mpq_class v) : field_(f), v_(std::move(v)) {}

    static void require_same_field(const Scalar& a, const Scalar& b);
    static mpq_class reduce(const mpz_class& n, unsigned long p);

    FieldSpec field_;
    mpq_class v_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations.
Scalar arith(ArithOp op, const Scalar& x, const Scalar& y);

/// Parses "n", "n/m" (rational fields) or a bare residue in [0, p) (prime
/// fields). Parsing a printed canonical form is the identity.
Scalar parse_scalar(const std::string& text, const FieldSpec& f);

/// The common value of m/n = r/s computed as (m+r)/(n+s). Preconditions
/// (n, s, n+s nonzero; equal ratios) are checked and reported by clause.
Scalar mediant(const Scalar& m, const Scalar& n, const Scalar& r, const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace leonard
