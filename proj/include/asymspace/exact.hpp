#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "asymspace/errors.hpp"

namespace asymspace {

// Exact scalar for the whole decision path. GMP keeps rationals reduced
// with a positive denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int rat_sign(const Rational& r) {
    if (r < 0) return -1;
    if (r > 0) return 1;
    return 0;
}

/// Parses "p", "-p" or "p/q" with integer p, q (q > 0 after normalization).
/// Floating-point literals are rejected on purpose.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw parse_error("invalid rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    std::size_t slash = text.find('/');
    auto check_int = [&](std::string_view part) {
        if (part.empty()) fail();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) fail();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') fail();
    };
    if (slash == std::string_view::npos) {
        check_int(text);
        return Rational(BigInt(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d{std::string(den)};
    if (d == 0) throw parse_error("zero denominator in rational literal: '" + std::string(text) + "'");
    return Rational(BigInt(std::string(num)), d);
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// A point of the ambient space, exact rational coordinates.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : coords_(dim, Rational(0)) {}
    Vec(std::initializer_list<Rational> init) : coords_(init) {}
    explicit Vec(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static Vec unit(std::size_t dim, std::size_t index) {
        Vec v(dim);
        v[index] = 1;
        return v;
    }

    std::size_t size() const { return coords_.size(); }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    Vec& operator+=(const Vec& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Vec& operator*=(const Rational& s) {
        for (auto& c : coords_) c *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Rational& s, Vec v) { return v *= s; }
    friend Vec operator-(const Vec& v) {
        Vec r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
        return r;
    }

    friend Rational dot(const Vec& a, const Vec& b) {
        a.require_same_dim(b);
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

private:
    void require_same_dim(const Vec& o) const {
        if (coords_.size() != o.coords_.size())
            throw dimension_mismatch("vector dimensions differ: " + std::to_string(coords_.size()) +
                                     " vs " + std::to_string(o.coords_.size()));
    }

    std::vector<Rational> coords_;
};

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction (content 1). Used to canonicalize cone generators.
inline Vec primitive_direction(const Vec& v) {
    BigInt lcm_den = 1;
    for (const auto& c : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    BigInt gcd_num = 0;
    for (const auto& c : v) gcd_num = boost::multiprecision::gcd(gcd_num, BigInt(numerator(c) * (lcm_den / denominator(c))));
    if (gcd_num == 0) return v; // zero vector stays put
    Rational scale(lcm_den, gcd_num);
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * scale;
    return r;
}

/// Dense rational matrix, stored row-major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Vec(cols)) {}
    explicit Mat(std::vector<Vec> rows) : rows_(std::move(rows)) {
        cols_ = rows_.empty() ? 0 : rows_[0].size();
        for (const auto& r : rows_)
            if (r.size() != cols_) throw dimension_mismatch("ragged matrix rows");
    }
    Mat(std::initializer_list<Vec> rows) : Mat(std::vector<Vec>(rows)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty(); }

    Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    Vec& row(std::size_t r) { return rows_[r]; }
    const Vec& row(std::size_t r) const { return rows_[r]; }
    const std::vector<Vec>& row_list() const { return rows_; }

    void append_row(Vec v) {
        if (rows_.empty()) cols_ = v.size();
        else if (v.size() != cols_) throw dimension_mismatch("appended row has wrong length");
        rows_.push_back(std::move(v));
    }

    Mat transpose() const {
        Mat t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Vec operator*(const Mat& m, const Vec& v) {
        if (v.size() != m.cols()) throw dimension_mismatch("matrix-vector size mismatch");
        Vec r(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) r[i] = dot(m.row(i), v);
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols() != b.rows()) throw dimension_mismatch("matrix-matrix size mismatch");
        Mat r(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw dimension_mismatch("matrix difference size mismatch");
        Mat r(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<Vec> rows_;
};

/// In-place reduced row echelon form; returns the pivot column of each
/// surviving row, in order. Zero rows are removed.
inline std::vector<std::size_t> rref_inplace(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        std::size_t sel = pr;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        std::swap(m.row(pr), m.row(sel));
        Rational inv = Rational(1) / m.at(pr, col);
        m.row(pr) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(pr, j);
        }
        pivots.push_back(col);
        ++pr;
    }
    // drop the all-zero tail
    std::vector<Vec> kept;
    for (std::size_t i = 0; i < pivots.size(); ++i) kept.push_back(m.row(i));
    m = Mat(std::move(kept));
    return pivots;
}

inline std::size_t rank(Mat m) { return rref_inplace(m).size(); }

/// Solves Mx = b; returns one solution or nullopt when inconsistent.
inline std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
    if (m.rows() != b.size()) throw dimension_mismatch("solve_linear rhs size");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = rref_inplace(aug);
    Vec x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return std::nullopt; // pivot in rhs column
        x[pivots[i]] = aug.at(i, m.cols());
    }
    return x;
}

/// Inverse of a square nonsingular matrix (throws on singular input).
inline Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("inverse of non-square matrix");
    std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref_inplace(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// A linear subspace with a canonical basis: the reduced row echelon form of
/// any spanning set. Two equal subspaces therefore store identical bases.
class Subspace {
public:
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
        for (const auto& v : vectors)
            if (v.size() != ambient)
                throw dimension_mismatch("spanning vector has wrong dimension");
        Mat m(vectors);
        if (!vectors.empty()) rref_inplace(m);
        return Subspace(ambient, m.row_list());
    }

    static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }

    static Subspace full(std::size_t ambient) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < ambient; ++i) rows.push_back(Vec::unit(ambient, i));
        return Subspace(ambient, rows);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }

    /// Exact membership: x is a rational combination of the basis.
    bool contains(const Vec& x) const {
        if (x.size() != ambient_) throw dimension_mismatch("membership dimension mismatch");
        Vec r = reduce(x);
        return r.is_zero();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw dimension_mismatch("subspace ambient mismatch");
        return std::all_of(other.basis_.begin(), other.basis_.end(),
                           [&](const Vec& b) { return contains(b); });
    }

    /// Coordinates of x in the basis, when x belongs to the subspace.
    std::optional<Vec> coordinates(const Vec& x) const {
        if (x.size() != ambient_) throw dimension_mismatch("coordinates dimension mismatch");
        Vec r = x;
        Vec c(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t p = pivot_of(i);
            c[i] = r[p];
            if (c[i] != 0) r -= c[i] * basis_[i];
        }
        if (!r.is_zero()) return std::nullopt;
        return c;
    }

    Subspace sum(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw dimension_mismatch("subspace ambient mismatch");
        std::vector<Vec> all = basis_;
        all.insert(all.end(), other.basis_.begin(), other.basis_.end());
        return span(ambient_, all);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient, std::vector<Vec> canonical_basis)
        : ambient_(ambient), basis_(std::move(canonical_basis)) {}

    std::size_t pivot_of(std::size_t row) const {
        const Vec& b = basis_[row];
        for (std::size_t j = 0; j < ambient_; ++j)
            if (b[j] != 0) return j;
        return ambient_;
    }

    Vec reduce(const Vec& x) const {
        Vec r = x;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t p = pivot_of(i);
            if (r[p] != 0) r -= r[p] * basis_[i];
        }
        return r;
    }

    std::size_t ambient_;
    std::vector<Vec> basis_;
};

/// Exact kernel {x : Mx = 0} with canonical basis. An empty matrix (zero
/// rows) yields the full space.
inline Subspace null_space(const Mat& m, std::size_t ambient) {
    if (m.rows() == 0) return Subspace::full(ambient);
    if (m.cols() != ambient) throw dimension_mismatch("null_space ambient mismatch");
    Mat r = m;
    auto pivots = rref_inplace(r);
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> kernel;
    for (std::size_t j = 0; j < ambient; ++j) {
        if (is_pivot[j]) continue;
        Vec v(ambient);
        v[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, j);
        kernel.push_back(std::move(v));
    }
    return Subspace::span(ambient, kernel);
}

inline Subspace null_space(const Mat& m) {
    if (m.rows() == 0) throw dimension_mismatch("null_space of empty matrix needs explicit ambient dimension");
    return null_space(m, m.cols());
}

/// Orthogonal complement with respect to the standard dot product.
inline Subspace orthogonal_complement(const Subspace& s) {
    return null_space(Mat(s.basis()), s.ambient());
}

/// Orthogonal projection matrix onto the subspace: B^T (B B^T)^{-1} B.
inline Mat projection_onto(const Subspace& s) {
    std::size_t n = s.ambient();
    if (s.dim() == 0) return Mat(n, n);
    Mat b(s.basis());
    Mat bt = b.transpose();
    Mat gram = b * bt;
    return bt * inverse(gram) * b;
}

} // namespace asymspace
