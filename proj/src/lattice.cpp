#include "ballq/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace ballq {

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw LatticeError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> entries) {
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw LatticeError("matrix shape mismatch in product");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Signature

namespace {

void swap_symmetric(RationalMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
}

// row_i += row_j, col_i += col_j
void add_symmetric(RationalMatrix& a, std::size_t i, std::size_t j) {
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
}

}  // namespace

Inertia signature(const RationalMatrix& gram) {
    if (!gram.is_square()) throw LatticeError("signature: matrix is not square");
    if (!gram.is_symmetric()) throw LatticeError("signature: matrix is not symmetric");

    RationalMatrix a = gram;
    const std::size_t n = a.rows();
    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!a(i, i).is_zero()) { pivot = i; break; }
        }
        if (pivot == n) {
            // All remaining diagonal entries vanish: manufacture one from the
            // first nonzero off-diagonal entry.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!a(i, j).is_zero()) { pi = i; pj = j; break; }
            if (pi == n) {
                out.n_zero += n - k;
                break;
            }
            add_symmetric(a, pi, pj);
            pivot = pi;
        }
        swap_symmetric(a, k, pivot);

        const Rational p = a(k, k);
        (p.sign() > 0 ? out.n_plus : out.n_minus) += 1;
        const std::vector<Rational> pivot_row = a.row(k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (pivot_row[r].is_zero()) continue;
            const Rational f = pivot_row[r] / p;
            for (std::size_t c = k; c < n; ++c) a(r, c) -= f * pivot_row[c];
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            a(k, r) = 0;
            a(r, k) = 0;
        }
    }
    return out;
}

bool is_negative_definite(const RationalMatrix& gram) {
    const Inertia s = signature(gram);
    return s.n_plus == 0 && s.n_zero == 0;
}

std::vector<Rational> solve_linear(const RationalMatrix& a, std::span<const Rational> b) {
    if (!a.is_square() || a.rows() != b.size()) throw LatticeError("solve_linear: shape mismatch");
    const std::size_t n = a.rows();
    RationalMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw LatticeError("solve_linear: singular matrix");
        if (pivot != k)
            for (std::size_t c = 0; c <= n; ++c) std::swap(m(k, c), m(pivot, c));
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || m(r, k).is_zero()) continue;
            const Rational f = m(r, k) / m(k, k);
            for (std::size_t c = k; c <= n; ++c) m(r, c) -= f * m(k, c);
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n) / m(i, i);
    return x;
}

// ---------------------------------------------------------------------------
// IntersectionLattice / DivisorClass

IntersectionLattice::IntersectionLattice(std::vector<std::string> labels, RationalMatrix gram) {
    if (!gram.is_square()) throw LatticeError("gram matrix is not square");
    if (gram.rows() != labels.size()) {
        throw LatticeError("gram dimension " + std::to_string(gram.rows()) + " does not match " +
                           std::to_string(labels.size()) + " basis labels");
    }
    if (!gram.is_symmetric()) throw LatticeError("gram matrix is not symmetric");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) throw LatticeError("duplicate basis label '" + l + "'");
    }
    impl_ = std::make_shared<const Impl>(Impl{std::move(labels), std::move(gram)});
}

std::size_t IntersectionLattice::index_of(const std::string& label) const {
    const auto& ls = impl_->labels;
    const auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) throw LatticeError("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - ls.begin());
}

DivisorClass IntersectionLattice::zero() const {
    return DivisorClass(*this, std::vector<Rational>(dimension()));
}

DivisorClass IntersectionLattice::basis(const std::string& label) const {
    std::vector<Rational> c(dimension());
    c[index_of(label)] = 1;
    return DivisorClass(*this, std::move(c));
}

DivisorClass IntersectionLattice::make(std::vector<Rational> coeffs) const {
    return DivisorClass(*this, std::move(coeffs));
}

DivisorClass::DivisorClass(IntersectionLattice lattice, std::vector<Rational> coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != lattice_.dimension()) {
        throw LatticeError("divisor has " + std::to_string(coeffs_.size()) +
                           " coefficients, lattice dimension is " +
                           std::to_string(lattice_.dimension()));
    }
}

const Rational& DivisorClass::coeff(const std::string& label) const {
    return coeffs_[lattice_.index_of(label)];
}

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

namespace {
void require_same(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.lattice() == b.lattice())) throw LatticeError("divisor classes belong to different lattices");
}
}  // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.lattice_ == b.lattice_ && a.coeffs_ == b.coeffs_;
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (mag != Rational(1)) os << mag << "*";
        os << lattice_.labels()[i];
        first = false;
    }
    return first ? "0" : os.str();
}

Rational pair(const DivisorClass& u, const DivisorClass& v) {
    require_same(u, v);
    const auto& g = u.lattice().gram();
    const auto& a = u.coeffs();
    const auto& b = v.coeffs();
    Rational total;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        Rational row;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero()) row += g(i, j) * b[j];
        }
        total += a[i] * row;
    }
    return total;
}

bool numerically_equivalent(const DivisorClass& u, const DivisorClass& v) {
    const DivisorClass diff = u - v;
    for (const auto& label : u.lattice().labels()) {
        if (!pair(diff, u.lattice().basis(label)).is_zero()) return false;
    }
    return true;
}

std::vector<OrthogonalVector> orthogonalize(std::span<const DivisorClass> vectors) {
    std::vector<OrthogonalVector> out;
    out.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        DivisorClass w = vectors[i];
        if (i > 0) require_same(vectors[0], w);
        for (std::size_t j = 0; j < out.size(); ++j) {
            const Rational proj = pair(vectors[i], out[j].vector);
            if (proj.is_zero()) continue;
            if (out[j].norm.is_zero()) {
                throw LatticeError("orthogonalize: vector " + std::to_string(j) +
                                   " is isotropic; projection onto it is undefined");
            }
            w -= (proj / out[j].norm) * out[j].vector;
        }
        if (w.is_zero()) {
            throw LatticeError("orthogonalize: vector " + std::to_string(i) +
                               " is a linear combination of vectors 0.." + std::to_string(i - 1));
        }
        Rational n = square(w);
        out.push_back({std::move(w), std::move(n)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

IntersectionLattice lattice_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw LatticeError(std::string("lattice JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("basis") || !doc.contains("gram")) {
        throw LatticeError("lattice JSON must be an object with 'basis' and 'gram'");
    }
    const auto& basis = doc.at("basis");
    const auto& gram = doc.at("gram");
    if (!basis.is_array() || !gram.is_array()) throw LatticeError("'basis' and 'gram' must be arrays");

    std::vector<std::string> labels;
    for (const auto& b : basis) {
        if (!b.is_string()) throw LatticeError("basis labels must be strings");
        labels.push_back(b.get<std::string>());
    }
    const std::size_t n = gram.size();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = gram[i];
        if (!row.is_array() || row.size() != n) {
            throw LatticeError("gram row " + std::to_string(i) + " has wrong length");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto& cell = row[j];
            if (cell.is_string()) {
                m(i, j) = Rational::parse(cell.get<std::string>());
            } else if (cell.is_number_integer()) {
                m(i, j) = Rational(cell.get<long>());
            } else {
                throw LatticeError("gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") must be a \"p/q\" string or an integer");
            }
        }
    }
    return IntersectionLattice(std::move(labels), std::move(m));
}

std::string lattice_to_json(const IntersectionLattice& lattice, int indent) {
    nlohmann::json doc;
    doc["basis"] = lattice.labels();
    nlohmann::json gram = nlohmann::json::array();
    for (std::size_t i = 0; i < lattice.dimension(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < lattice.dimension(); ++j) row.push_back(lattice.gram()(i, j).str());
        gram.push_back(std::move(row));
    }
    doc["gram"] = std::move(gram);
    return doc.dump(indent);
}

}  // namespace ballq
