#include "leonard/scalar.hpp"

#include <ostream>
#include <utility>

namespace leonard {

namespace {

unsigned long g_prime_cap = 1ul << 16;

} // namespace

unsigned long prime_cap() { return g_prime_cap; }

void set_prime_cap(unsigned long cap) { g_prime_cap = cap; }

FieldSpec FieldSpec::rational() { return FieldSpec(FieldKind::Rational, 0); }

FieldSpec FieldSpec::prime(unsigned long p) {
    if (p < 2)
        throw PreconditionError("prime field modulus must be at least 2");
    if (p > g_prime_cap)
        throw PreconditionError("prime field modulus " + std::to_string(p) +
                                " exceeds the cap " + std::to_string(g_prime_cap));
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(pz.get_mpz_t(), 32) == 0)
        throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::Prime, p);
}

unsigned long FieldSpec::p() const {
    if (kind_ != FieldKind::Prime)
        throw PreconditionError("field has no modulus: it is the rationals");
    return p_;
}

std::string FieldSpec::describe() const {
    return kind_ == FieldKind::Rational ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar() : field_(FieldSpec::rational()), v_(0) {}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0)); }

Scalar Scalar::one(const FieldSpec& f) { return Scalar(f, mpq_class(1)); }

mpq_class Scalar::reduce(const mpz_class& n, unsigned long p) {
    mpz_class m = n % mpz_class(p);
    if (m < 0)
        m += mpz_class(p);
    return mpq_class(m);
}

Scalar Scalar::from_integer(long n, const FieldSpec& f) {
    if (f.is_prime_field())
        return Scalar(f, reduce(mpz_class(n), f.p()));
    return Scalar(f, mpq_class(n));
}

Scalar Scalar::from_mpq(mpq_class v, const FieldSpec& f) {
    v.canonicalize();
    if (f.is_prime_field()) {
        if (v.get_den() != 1)
            throw PreconditionError("non-integral value for a prime field element");
        return Scalar(f, reduce(v.get_num(), f.p()));
    }
    return Scalar(f, std::move(v));
}

bool Scalar::is_zero() const { return sgn(v_) == 0; }

bool Scalar::is_one() const { return v_ == 1; }

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_))
        throw PreconditionError("field mismatch: " + a.field_.describe() + " vs " +
                                b.field_.describe());
}

Scalar Scalar::operator-() const {
    if (field_.is_prime_field())
        return Scalar(field_, reduce(-v_.get_num(), field_.p()));
    return Scalar(field_, -v_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(*this, o);
    if (field_.is_prime_field())
        return Scalar(field_, reduce(v_.get_num() + o.v_.get_num(), field_.p()));
    return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(*this, o);
    if (field_.is_prime_field())
        return Scalar(field_, reduce(v_.get_num() - o.v_.get_num(), field_.p()));
    return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(*this, o);
    if (field_.is_prime_field())
        return Scalar(field_, reduce(v_.get_num() * o.v_.get_num(), field_.p()));
    return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw PreconditionError("division by zero");
    if (field_.is_prime_field()) {
        mpz_class inv;
        mpz_class p(field_.p());
        if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
            throw InternalError("nonzero residue has no inverse; modulus not prime?");
        return Scalar(field_, mpq_class(inv));
    }
    return Scalar(field_, 1 / v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(*this, o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && v_ == o.v_;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return ::cmp(a.v_, b.v_);
}

std::string Scalar::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar arith(ArithOp op, const Scalar& x, const Scalar& y) {
    switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
    }
    throw PreconditionError("unknown arithmetic operation");
}

namespace {

// Scans a run of decimal digits starting at pos; returns false if empty.
bool scan_digits(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
        ++pos;
    return pos > start;
}

} // namespace

Scalar parse_scalar(const std::string& text, const FieldSpec& f) {
    if (text.empty())
        throw ParseError("empty scalar");

    size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    size_t num_start = pos;
    if (!scan_digits(text, pos))
        throw ParseError("malformed scalar '" + text + "'");
    std::string num = text.substr(num_start, pos - num_start);

    std::string den;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t den_start = pos;
        if (!scan_digits(text, pos))
            throw ParseError("malformed scalar '" + text + "'");
        den = text.substr(den_start, pos - den_start);
    }
    if (pos != text.size())
        throw ParseError("malformed scalar '" + text + "'");

    if (f.is_prime_field()) {
        if (negative)
            throw ParseError("negative residue '" + text + "' for " + f.describe());
        if (!den.empty())
            throw ParseError("fraction '" + text + "' supplied for a prime field");
        mpz_class r(num);
        if (r >= mpz_class(f.p()))
            throw ParseError("residue " + num + " out of range for " + f.describe());
        return Scalar::from_mpq(mpq_class(r), f);
    }

    mpz_class n(num);
    if (negative)
        n = -n;
    if (den.empty())
        return Scalar::from_mpq(mpq_class(n), f);
    mpz_class d(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    return Scalar::from_mpq(std::move(q), f);
}

Scalar mediant(const Scalar& m, const Scalar& n, const Scalar& r, const Scalar& s) {
    if (n.is_zero())
        throw PreconditionError("mediant: n is zero");
    if (s.is_zero())
        throw PreconditionError("mediant: s is zero");
    if ((n + s).is_zero())
        throw PreconditionError("mediant: n + s is zero");
    if (m * s != r * n)
        throw PreconditionError("mediant: ratio precondition fails, m/n = " + (m / n).str() +
                                " but r/s = " + (r / s).str());
    return (m + r) / (n + s);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace leonard
