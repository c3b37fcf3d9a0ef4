#include "leonard/matrix.hpp"

#include <sstream>
#include <utility>

namespace leonard {

Matrix::Matrix(int rows, int cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f) {
    if (rows < 1 || cols < 1)
        throw PreconditionError("matrix dimensions must be at least 1x1");
    e_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(int n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i)
        m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    if (d.empty())
        throw PreconditionError("diagonal needs at least one entry");
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()), d.front().field());
    for (size_t i = 0; i < d.size(); ++i)
        m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

Matrix Matrix::outer(const std::vector<Scalar>& col, const std::vector<Scalar>& row) {
    if (col.empty() || row.empty())
        throw PreconditionError("outer product needs nonempty vectors");
    Matrix m(static_cast<int>(col.size()), static_cast<int>(row.size()), col.front().field());
    for (size_t i = 0; i < col.size(); ++i)
        for (size_t j = 0; j < row.size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), col[i] * row[j]);
    return m;
}

void Matrix::check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw PreconditionError("matrix index out of range");
}

const Scalar& Matrix::at(int i, int j) const {
    check_index(i, j);
    return e_[static_cast<size_t>(i) * cols_ + j];
}

void Matrix::set(int i, int j, Scalar v) {
    check_index(i, j);
    if (!(v.field() == field_))
        throw PreconditionError("entry field differs from matrix field");
    e_[static_cast<size_t>(i) * cols_ + j] = std::move(v);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw PreconditionError("matrix shape or field mismatch in addition");
    Matrix m(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k)
        m.e_[k] = e_[k] + o.e_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw PreconditionError("matrix shape or field mismatch in subtraction");
    Matrix m(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k)
        m.e_[k] = e_[k] - o.e_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw PreconditionError("matrix shape mismatch in product");
    if (!(field_ == o.field_))
        throw PreconditionError("matrix field mismatch in product");
    Matrix m(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero())
                    continue;
                m.set(i, j, m.at(i, j) + a * b);
            }
        }
    return m;
}

Matrix Matrix::scaled(const Scalar& k) const {
    Matrix m(rows_, cols_, field_);
    for (size_t idx = 0; idx < e_.size(); ++idx)
        m.e_[idx] = e_[idx] * k;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    for (const Scalar& v : e_)
        if (!v.is_zero())
            return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.set(j, i, at(i, j));
    return m;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_)
        throw PreconditionError("trace of a non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (int i = 0; i < rows_; ++i)
        t = t + at(i, i);
    return t;
}

namespace {

int rank_rational(const Matrix& X) {
    const int r = X.rows();
    const int c = X.cols();
    // Scale each row to integers; row scaling does not change the rank.
    std::vector<std::vector<mpz_class>> m(r, std::vector<mpz_class>(c));
    for (int i = 0; i < r; ++i) {
        mpz_class l(1);
        for (int j = 0; j < c; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), X.at(i, j).value().get_den().get_mpz_t());
        for (int j = 0; j < c; ++j) {
            const mpq_class& q = X.at(i, j).value();
            m[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    // Bareiss fraction-free elimination; the divisions below are exact.
    mpz_class prev(1);
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[row]);
        for (int i = row + 1; i < r; ++i) {
            for (int j = col + 1; j < c; ++j) {
                mpz_class t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return row;
}

int rank_prime(const Matrix& X) {
    const int r = X.rows();
    const int c = X.cols();
    const mpz_class p(X.field().p());
    std::vector<std::vector<mpz_class>> m(r, std::vector<mpz_class>(c));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m[i][j] = X.at(i, j).value().get_num();
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[row]);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), m[row][col].get_mpz_t(), p.get_mpz_t());
        for (int i = row + 1; i < r; ++i) {
            if (m[i][col] == 0)
                continue;
            mpz_class factor = (m[i][col] * inv) % p;
            for (int j = col; j < c; ++j)
                m[i][j] = ((m[i][j] - factor * m[row][j]) % p + p) % p;
        }
        ++row;
    }
    return row;
}

} // namespace

int Matrix::rank() const {
    return field_.is_prime_field() ? rank_prime(*this) : rank_rational(*this);
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << "\n";
    }
    return os.str();
}

IdempotentSystemVerdict is_idempotent_system(const std::vector<Matrix>& E) {
    IdempotentSystemVerdict out;
    if (E.empty()) {
        out.ok = false;
        out.clause = "empty";
        out.detail = "no idempotents given";
        return out;
    }
    const int n = E.front().rows();
    const FieldSpec f = E.front().field();
    for (const Matrix& e : E)
        if (e.rows() != n || e.cols() != n || !(e.field() == f))
            throw PreconditionError("idempotent system members must share shape and field");

    const int k = static_cast<int>(E.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Matrix prod = E[i] * E[j];
            const Matrix& expect = (i == j) ? E[i] : Matrix(n, n, f);
            if (!(prod == expect)) {
                out.ok = false;
                out.clause = "product";
                out.i = i;
                out.j = j;
                out.detail = "E" + std::to_string(i) + "*E" + std::to_string(j) +
                             (i == j ? " != E" + std::to_string(i) : " != 0");
                return out;
            }
        }
    for (int i = 0; i < k; ++i)
        if (E[i].rank() != 1) {
            out.ok = false;
            out.clause = "rank";
            out.i = i;
            out.detail = "rank(E" + std::to_string(i) + ") = " + std::to_string(E[i].rank());
            return out;
        }
    Matrix sum(n, n, f);
    for (const Matrix& e : E)
        sum = sum + e;
    if (!(sum == Matrix::identity(n, f))) {
        out.ok = false;
        out.clause = "sum";
        out.detail = "sum of idempotents is not the identity";
        return out;
    }
    return out;
}

} // namespace leonard
