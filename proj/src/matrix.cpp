#include "lpairs/matrix.hpp"

#include <cstdlib>

namespace lpairs {

namespace {

void require_same_size(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::LengthMismatch, "matrix dimensions disagree");
    if (*a.field() != *b.field())
        throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
}

void require_irreducible_tridiagonal(const Matrix& m) {
    TridiagonalClass c = tridiagonal_class(m);
    if (!c.irreducible)
        throw Error(ErrorCode::NotIrreducibleTridiagonal, "matrix is not irreducible tridiagonal");
}

}  // namespace

Matrix::Matrix(FieldPtr field, int n)
    : field_(std::move(field)), n_(n),
      entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), field_->zero()) {
    if (n <= 0) throw Error(ErrorCode::InvalidInput, "matrix dimension must be positive");
}

Matrix::Matrix(FieldPtr field, std::vector<std::vector<FieldElement>> rows)
    : Matrix(field, static_cast<int>(rows.size())) {
    for (int i = 0; i < n_; ++i) {
        if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n_))
            throw Error(ErrorCode::LengthMismatch, "matrix rows have unequal lengths");
        for (int j = 0; j < n_; ++j) set(i, j, std::move(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
}

Matrix Matrix::identity(const FieldPtr& field, int n) {
    Matrix m(field, n);
    for (int i = 0; i < n; ++i) m.set(i, i, field->one());
    return m;
}

Matrix Matrix::diagonal(const FieldPtr& field, const std::vector<FieldElement>& entries) {
    Matrix m(field, static_cast<int>(entries.size()));
    for (int i = 0; i < m.size(); ++i) m.set(i, i, entries[static_cast<std::size_t>(i)]);
    return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_size(*this, rhs);
    Matrix r(field_, n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + rhs.entries_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_size(*this, rhs);
    Matrix r(field_, n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - rhs.entries_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_size(*this, rhs);
    Matrix r(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            FieldElement acc = field_->zero();
            for (int k = 0; k < n_; ++k) acc += at(i, k) * rhs.at(k, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(field_, n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
    return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix r(field_, n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = c * entries_[k];
    return r;
}

Matrix Matrix::plus_scalar_identity(const FieldElement& c) const {
    Matrix r = *this;
    for (int i = 0; i < n_; ++i) r.set(i, i, r.at(i, i) + c);
    return r;
}

bool Matrix::operator==(const Matrix& rhs) const {
    require_same_size(*this, rhs);
    return entries_ == rhs.entries_;
}

bool Matrix::operator<(const Matrix& rhs) const {
    require_same_size(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] < rhs.entries_[k]) return true;
        if (rhs.entries_[k] < entries_[k]) return false;
    }
    return false;
}

bool Matrix::is_diagonal() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

std::vector<FieldElement> Matrix::diagonal_entries() const {
    std::vector<FieldElement> d;
    d.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) d.push_back(at(i, i));
    return d;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != static_cast<std::size_t>(n_))
        throw Error(ErrorCode::LengthMismatch, "vector length disagrees with matrix size");
    std::vector<FieldElement> r(static_cast<std::size_t>(n_), field_->zero());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

TridiagonalClass tridiagonal_class(const Matrix& m) {
    TridiagonalClass c;
    const int n = m.size();
    c.tridiagonal = true;
    for (int i = 0; i < n && c.tridiagonal; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) > 1 && !m.at(i, j).is_zero()) {
                c.tridiagonal = false;
                break;
            }
    if (!c.tridiagonal) return c;
    c.irreducible = true;
    c.normalized = true;
    for (int i = 1; i < n; ++i) {
        if (m.at(i, i - 1).is_zero() || m.at(i - 1, i).is_zero()) c.irreducible = false;
        if (!m.at(i, i - 1).is_one()) c.normalized = false;
    }
    c.normalized = c.normalized && c.irreducible;
    return c;
}

Matrix diag_conjugate(const Matrix& m, const DiagonalWitness& s) {
    const int n = m.size();
    if (s.s.size() != static_cast<std::size_t>(n))
        throw Error(ErrorCode::LengthMismatch, "witness length disagrees with matrix size");
    std::vector<FieldElement> inv;
    inv.reserve(s.s.size());
    for (const auto& si : s.s) {
        if (si.is_zero()) throw Error(ErrorCode::InvalidInput, "diagonal witness entry is zero");
        inv.push_back(si.inverse());
    }
    Matrix r(m.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.set(i, j, s.s[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(j)] * m.at(i, j));
    return r;
}

std::optional<DiagonalWitness> diag_equiv_witness(const Matrix& a, const Matrix& b) {
    require_same_size(a, b);
    require_irreducible_tridiagonal(a);
    require_irreducible_tridiagonal(b);
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        if (a.at(i, i) != b.at(i, i)) return std::nullopt;
    for (int i = 1; i < n; ++i)
        if (a.at(i, i - 1) * a.at(i - 1, i) != b.at(i, i - 1) * b.at(i - 1, i)) return std::nullopt;

    DiagonalWitness w;
    w.s.push_back(a.field()->one());
    for (int i = 1; i < n; ++i)
        w.s.push_back(w.s.back() * b.at(i, i - 1) / a.at(i, i - 1));
    if (diag_conjugate(a, w) != b)
        throw Error(ErrorCode::InternalInconsistency, "diagonal-equivalence witness failed to conjugate");
    return w;
}

Normalized normalize(const Matrix& a) {
    require_irreducible_tridiagonal(a);
    const int n = a.size();
    Matrix b(a.field(), n);
    for (int i = 0; i < n; ++i) b.set(i, i, a.at(i, i));
    for (int i = 1; i < n; ++i) {
        b.set(i, i - 1, a.field()->one());
        b.set(i - 1, i, a.at(i, i - 1) * a.at(i - 1, i));
    }
    auto w = diag_equiv_witness(a, b);
    if (!w) throw Error(ErrorCode::InternalInconsistency, "normalization is not diagonally equivalent");
    return Normalized{std::move(b), std::move(*w)};
}

Matrix bond_mate(const Matrix& a) {
    require_irreducible_tridiagonal(a);
    Matrix r = a;
    for (int i = 0; i < a.size(); ++i) r.set(i, i, -a.at(i, i));
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require_same_size(a, b);
    return a * b - b * a;
}

}  // namespace lpairs
