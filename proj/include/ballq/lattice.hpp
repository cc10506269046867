#pragma once

/**
 * @file lattice.hpp
 * @brief Exact rational linear algebra for divisor lattices.
 *
 * An IntersectionLattice is an immutable named basis together with a
 * symmetric Gram matrix. DivisorClass values carry a handle to the lattice
 * they live in; pairing classes from two different lattices is an error,
 * even if both lattices happen to have identical data.
 */

#include "ballq/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ballq {

class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(std::span<const Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;

    RationalMatrix transpose() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric matrix by exact congruence diagonalization.
/// Throws LatticeError on non-square or non-symmetric input.
Inertia signature(const RationalMatrix& gram);

/// True iff the symmetric matrix is negative definite.
bool is_negative_definite(const RationalMatrix& gram);

/// Solves A x = b exactly. Throws LatticeError if A is singular or shapes disagree.
std::vector<Rational> solve_linear(const RationalMatrix& a, std::span<const Rational> b);

class DivisorClass;

class IntersectionLattice {
public:
    /// Validates: square, symmetric, one label per row, labels unique.
    IntersectionLattice(std::vector<std::string> labels, RationalMatrix gram);

    std::size_t dimension() const { return impl_->labels.size(); }
    const std::vector<std::string>& labels() const { return impl_->labels; }
    const RationalMatrix& gram() const { return impl_->gram; }

    /// Index of a basis label; throws LatticeError if unknown.
    std::size_t index_of(const std::string& label) const;

    DivisorClass zero() const;
    DivisorClass basis(const std::string& label) const;
    DivisorClass make(std::vector<Rational> coeffs) const;

    /// Identity comparison: two handles to the same constructed lattice.
    friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
        return a.impl_ == b.impl_;
    }

private:
    struct Impl {
        std::vector<std::string> labels;
        RationalMatrix gram;
    };
    std::shared_ptr<const Impl> impl_;
};

class DivisorClass {
public:
    DivisorClass(IntersectionLattice lattice, std::vector<Rational> coeffs);

    const IntersectionLattice& lattice() const { return lattice_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(const std::string& label) const;

    bool is_zero() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& s);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
    DivisorClass operator-() const { return Rational(-1) * *this; }

    /// Coefficient-wise equality within one lattice.
    friend bool operator==(const DivisorClass& a, const DivisorClass& b);

    /// e.g. "2/9*E3 + 1/4*E1".
    std::string str() const;

private:
    IntersectionLattice lattice_;
    std::vector<Rational> coeffs_;
};

/// u^T * gram * v. Throws LatticeError when u and v live in different lattices.
Rational pair(const DivisorClass& u, const DivisorClass& v);

/// Self-intersection u.u.
inline Rational square(const DivisorClass& u) { return pair(u, u); }

/// True iff u - v pairs to zero with every basis element.
bool numerically_equivalent(const DivisorClass& u, const DivisorClass& v);

struct OrthogonalVector {
    DivisorClass vector;
    Rational norm;
};

/// Gram-Schmidt over exact rationals. Throws LatticeError if the input is
/// linearly dependent (naming the offending index) or if an intermediate
/// vector is isotropic, which makes the projection undefined.
std::vector<OrthogonalVector> orthogonalize(std::span<const DivisorClass> vectors);

/// JSON document {"basis": [names], "gram": [["p/q", ...], ...]}.
IntersectionLattice lattice_from_json(const std::string& text);
std::string lattice_to_json(const IntersectionLattice& lattice, int indent = 2);

}  // namespace ballq
