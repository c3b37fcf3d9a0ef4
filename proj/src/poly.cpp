#include "leonard/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace leonard {

Poly::Poly(const FieldSpec& f) : field_(f) {}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    p.c_.push_back(c);
    p.trim();
    return p;
}

Poly Poly::monomial(const Scalar& c, int degree) {
    if (degree < 0)
        throw PreconditionError("monomial degree must be nonnegative");
    Poly p(c.field());
    if (!c.is_zero()) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Scalar::zero(c.field()));
        p.c_.back() = c;
    }
    return p;
}

Poly Poly::from_coeffs(std::vector<Scalar> coeffs, const FieldSpec& f) {
    Poly p(f);
    for (const Scalar& c : coeffs)
        if (!(c.field() == f))
            throw PreconditionError("polynomial coefficients must share one field");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::linear_root(const Scalar& r) {
    Poly p(r.field());
    p.c_ = {-r, Scalar::one(r.field())};
    return p;
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Scalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return Scalar::zero(field_);
    return c_[static_cast<size_t>(k)];
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (size_t k = c_.size(); k-- > 0;)
        acc = acc * x + c_[k];
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    if (!(field_ == o.field_))
        throw PreconditionError("polynomial field mismatch");
    Poly p(field_);
    size_t n = std::max(c_.size(), o.c_.size());
    p.c_.reserve(n);
    for (size_t k = 0; k < n; ++k)
        p.c_.push_back(coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k)));
    p.trim();
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-Scalar::one(field_)); }

Poly Poly::operator*(const Poly& o) const {
    if (!(field_ == o.field_))
        throw PreconditionError("polynomial field mismatch");
    if (is_zero() || o.is_zero())
        return Poly(field_);
    Poly p(field_);
    p.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            p.c_[i + j] = p.c_[i + j] + c_[i] * o.c_[j];
    }
    p.trim();
    return p;
}

Poly Poly::scaled(const Scalar& k) const {
    Poly p(field_);
    p.c_.reserve(c_.size());
    for (const Scalar& c : c_)
        p.c_.push_back(c * k);
    p.trim();
    return p;
}

bool Poly::operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

Poly Poly::deflated(const Scalar& root) const {
    if (degree() < 1)
        throw PreconditionError("cannot deflate a polynomial of degree < 1");
    // Synthetic division by (lambda - root).
    Poly q(field_);
    q.c_.assign(c_.size() - 1, Scalar::zero(field_));
    Scalar carry = c_.back();
    for (size_t k = c_.size() - 1; k-- > 0;) {
        q.c_[k] = carry;
        carry = c_[k] + carry * root;
    }
    if (!carry.is_zero())
        throw PreconditionError("deflation by a non-root: remainder " + carry.str());
    q.trim();
    return q;
}

std::string Poly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << c_[k].str();
        if (k == 1)
            os << "*x";
        else if (k > 1)
            os << "*x^" << k;
    }
    return os.str();
}

namespace {

// Divisors of |n| via trial division; desk-scale inputs only.
std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class d(2); d * d <= n;) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1)
        fac.emplace_back(n, 1);
    std::vector<mpz_class> out{mpz_class(1)};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        mpz_class pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    return out;
}

std::vector<RootMult> roots_rational(const Poly& f) {
    const FieldSpec f_q = f.field();
    std::vector<RootMult> roots;
    Poly g = f;

    // Roots at zero first.
    int zero_mult = 0;
    while (g.degree() >= 1 && g.coeff(0).is_zero()) {
        g = g.deflated(Scalar::zero(f_q));
        ++zero_mult;
    }
    if (zero_mult > 0)
        roots.push_back({Scalar::zero(f_q), zero_mult});

    if (g.degree() >= 1) {
        // Clear denominators; candidate roots are +-(divisor of constant) /
        // (divisor of leading coefficient) of the integer form.
        mpz_class lcm(1);
        for (int k = 0; k <= g.degree(); ++k)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g.coeff(k).value().get_den().get_mpz_t());
        auto int_coeff = [&](int k) {
            mpq_class q = g.coeff(k).value(); // copy: coeff() returns a temporary
            return mpz_class(q.get_num() * (lcm / q.get_den()));
        };
        std::vector<mpz_class> nums = divisors(int_coeff(0));
        std::vector<mpz_class> dens = divisors(int_coeff(g.degree()));
        for (const mpz_class& num : nums) {
            for (const mpz_class& den : dens) {
                mpz_class gcd;
                mpz_gcd(gcd.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (gcd != 1)
                    continue; // candidate already covered in lowest terms
                for (int sign : {1, -1}) {
                    mpq_class q(sign * num, den);
                    q.canonicalize();
                    Scalar r = Scalar::from_mpq(q, f_q);
                    int mult = 0;
                    while (g.degree() >= 1 && g.eval(r).is_zero()) {
                        g = g.deflated(r);
                        ++mult;
                    }
                    if (mult > 0)
                        roots.push_back({r, mult});
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RootMult& a, const RootMult& b) {
        return Scalar::cmp(a.root, b.root) > 0;
    });
    return roots;
}

std::vector<RootMult> roots_prime(const Poly& f) {
    const FieldSpec f_p = f.field();
    std::vector<RootMult> roots;
    Poly g = f;
    for (unsigned long r = 0; r < f_p.p() && g.degree() >= 1; ++r) {
        Scalar x = Scalar::from_integer(static_cast<long>(r), f_p);
        int mult = 0;
        while (g.degree() >= 1 && g.eval(x).is_zero()) {
            g = g.deflated(x);
            ++mult;
        }
        if (mult > 0)
            roots.push_back({x, mult});
    }
    return roots; // already ascending by representative
}

} // namespace

std::vector<RootMult> roots_in_field(const Poly& f) {
    if (f.is_zero())
        throw PreconditionError("root search on the zero polynomial");
    return f.field().is_prime_field() ? roots_prime(f) : roots_rational(f);
}

std::vector<Poly> u_sequence(const BipartiteSystem& sys) {
    const int d = sys.d();
    const FieldSpec f = sys.field();
    const Poly lambda = Poly::monomial(Scalar::one(f), 1);
    std::vector<Poly> u;
    u.reserve(static_cast<size_t>(d) + 2);
    u.push_back(Poly::constant(Scalar::one(f)));
    Poly prev(f); // u_{-1} = 0
    for (int i = 0; i <= d - 1; ++i) {
        // lambda u_i = c_i u_{i-1} + b_i u_{i+1}
        Poly next = (lambda * u.back() - prev.scaled(sys.c_at(i))).scaled(sys.b_at(i).inverse());
        prev = u.back();
        u.push_back(std::move(next));
    }
    // Top case restores the monic polynomial of degree d+1.
    Scalar bprod = Scalar::one(f);
    for (int i = 0; i < d; ++i)
        bprod = bprod * sys.b_at(i);
    u.push_back((lambda * u.back() - prev.scaled(sys.c_at(d))).scaled(bprod));
    return u;
}

std::vector<Poly> p_sequence(const BipartiteSystem& sys) {
    const int d = sys.d();
    const FieldSpec f = sys.field();
    const Poly lambda = Poly::monomial(Scalar::one(f), 1);
    std::vector<Poly> p;
    p.reserve(static_cast<size_t>(d) + 2);
    p.push_back(Poly::constant(Scalar::one(f)));
    Poly prev(f); // p_{-1} = 0
    for (int i = 0; i <= d; ++i) {
        // lambda p_i = b_{i-1} c_i p_{i-1} + p_{i+1}
        Scalar w = (i == 0) ? Scalar::zero(f) : sys.b_at(i - 1) * sys.c_at(i);
        Poly next = lambda * p.back() - prev.scaled(w);
        prev = p.back();
        p.push_back(std::move(next));
    }
    return p;
}

Poly char_poly(const BipartiteSystem& sys) { return u_sequence(sys).back(); }

Poly char_poly(const Matrix& x) {
    if (x.rows() != x.cols())
        throw PreconditionError("characteristic polynomial of a non-square matrix");
    const int n = x.rows();
    const FieldSpec f = x.field();
    const Scalar one = Scalar::one(f);

    std::vector<std::vector<Poly>> m(static_cast<size_t>(n),
                                     std::vector<Poly>(static_cast<size_t>(n), Poly(f)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = Poly::constant(-x.at(i, j));
            if (i == j)
                m[i][j] = m[i][j] + Poly::monomial(one, 1);
        }

    // Laplace expansion along columns with memoized row subsets.
    std::map<unsigned, Poly> memo;
    auto det = [&](auto&& self, unsigned rows_mask) -> Poly {
        if (rows_mask == 0)
            return Poly::constant(one);
        auto it = memo.find(rows_mask);
        if (it != memo.end())
            return it->second;
        int col = n - __builtin_popcount(rows_mask);
        Poly acc(f);
        int parity = 0;
        for (int i = 0; i < n; ++i) {
            if (!(rows_mask & (1u << i)))
                continue;
            if (!m[i][col].is_zero()) {
                Poly term = m[i][col] * self(self, rows_mask & ~(1u << i));
                acc = (parity % 2 == 0) ? acc + term : acc - term;
            }
            ++parity;
        }
        memo.emplace(rows_mask, acc);
        return acc;
    };
    return det(det, (1u << n) - 1u);
}

bool is_eigenvalue(const BipartiteSystem& sys, const Scalar& theta) {
    return char_poly(sys).eval(theta).is_zero();
}

CosineSeq cosine_sequence(const BipartiteSystem& sys, const Scalar& theta) {
    if (!(theta.field() == sys.field()))
        throw PreconditionError("theta must belong to the system field");
    if (!is_eigenvalue(sys, theta))
        throw PreconditionError("theta = " + theta.str() + " is not an eigenvalue");
    const int d = sys.d();
    std::vector<Scalar> alpha;
    alpha.reserve(static_cast<size_t>(d) + 1);
    alpha.push_back(Scalar::one(sys.field()));
    Scalar prev = Scalar::zero(sys.field()); // alpha_{-1}, killed by c_0 = 0
    for (int i = 0; i <= d - 1; ++i) {
        Scalar next = (theta * alpha.back() - sys.c_at(i) * prev) / sys.b_at(i);
        prev = alpha.back();
        alpha.push_back(next);
    }
    return CosineSeq{theta, std::move(alpha)};
}

} // namespace leonard
