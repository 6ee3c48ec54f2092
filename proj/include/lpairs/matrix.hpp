#pragma once

#include <optional>
#include <vector>

#include "lpairs/field.hpp"

namespace lpairs {

/// Dense square matrix over an exact field, rows and columns indexed 0..d.
/// Matrices are value types; every operation returns a fresh matrix.
class Matrix {
public:
    Matrix(FieldPtr field, int n);
    Matrix(FieldPtr field, std::vector<std::vector<FieldElement>> rows);

    static Matrix identity(const FieldPtr& field, int n);
    static Matrix diagonal(const FieldPtr& field, const std::vector<FieldElement>& entries);

    int size() const noexcept { return n_; }
    const FieldPtr& field() const noexcept { return field_; }

    const FieldElement& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
    void set(int i, int j, FieldElement v) { entries_[static_cast<std::size_t>(i * n_ + j)] = std::move(v); }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const FieldElement& c) const;
    /// this + c*I.
    Matrix plus_scalar_identity(const FieldElement& c) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    /// Lexicographic entry order within one field; for deterministic sorting.
    bool operator<(const Matrix& rhs) const;

    bool is_diagonal() const;
    std::vector<FieldElement> diagonal_entries() const;

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

private:
    FieldPtr field_;
    int n_;
    std::vector<FieldElement> entries_;
};

/// Invertible diagonal conjugator S = diag(s_0..s_d); every entry nonzero.
struct DiagonalWitness {
    std::vector<FieldElement> s;
};

struct TridiagonalClass {
    bool tridiagonal = false;
    bool irreducible = false;
    bool normalized = false;
};

/// Pattern tests: tridiagonal (zero beyond the three central diagonals),
/// irreducible (additionally nonzero sub- and superdiagonal), normalized
/// (additionally unit subdiagonal).
TridiagonalClass tridiagonal_class(const Matrix& m);

/// S m S^{-1}, computed entrywise as s_i s_j^{-1} m_{ij}.
Matrix diag_conjugate(const Matrix& m, const DiagonalWitness& s);

/// For irreducible tridiagonal a, b: the diagonal S with S a S^{-1} = b when
/// the diagonals agree and the sub*super products agree; empty otherwise.
std::optional<DiagonalWitness> diag_equiv_witness(const Matrix& a, const Matrix& b);

struct Normalized {
    Matrix normalized;
    DiagonalWitness witness;
};

/// The unique normalized matrix diagonally equivalent to a: same diagonal,
/// unit subdiagonal, superdiagonal entries a_{i,i-1} a_{i-1,i}.
Normalized normalize(const Matrix& a);

/// The bond mate -S a S^{-1} with S = diag((-1)^i): diagonal negated,
/// off-diagonal entries kept. Involutive; the identity map in characteristic 2.
Matrix bond_mate(const Matrix& a);

/// ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace lpairs
