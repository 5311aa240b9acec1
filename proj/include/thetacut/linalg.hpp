#ifndef THETACUT_LINALG_HPP
#define THETACUT_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "thetacut/graph.hpp"

namespace thetacut {

/// Shared definition of "numerically PSD": eigenvalues above -kPsdTolerance
/// count as non-negative everywhere in the library.
inline constexpr double kPsdTolerance = 1e-7;

/// Dense row-major square matrix (eigenvector bases and other
/// non-symmetric products).
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}
    static Matrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * dim_ + j]; }
    double* data() noexcept { return a_.data(); }
    const double* data() const noexcept { return a_.data(); }

private:
    std::size_t dim_ = 0;
    std::vector<double> a_;
};

/// Dense symmetric matrix. Storage is full, and `set` writes both mirrored
/// entries so the two triangles never disagree.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}
    static SymMatrix identity(std::size_t dim);
    static SymMatrix constant(std::size_t dim, double value);
    static SymMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const noexcept { return dim_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, double value) noexcept {
        a_[i * dim_ + j] = value;
        a_[j * dim_ + i] = value;
    }
    void add_diagonal(double shift) noexcept {
        for (std::size_t i = 0; i < dim_; ++i) a_[i * dim_ + i] += shift;
    }
    const double* data() const noexcept { return a_.data(); }

    double trace() const noexcept;
    double sum() const noexcept;
    double frobenius_norm() const noexcept;

    SymMatrix& operator+=(const SymMatrix& o) noexcept;
    SymMatrix& operator-=(const SymMatrix& o) noexcept;
    SymMatrix& operator*=(double s) noexcept;
    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) noexcept { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) noexcept { return a -= b; }
    friend SymMatrix operator*(SymMatrix a, double s) noexcept { return a *= s; }

private:
    std::size_t dim_ = 0;
    std::vector<double> a_;
};

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) noexcept;

/// Gram matrix of a vector family: entry (u, v) = <x_u, x_v>.
SymMatrix gram_matrix(const std::vector<std::vector<double>>& vectors);

SymMatrix adjacency_matrix(const Graph& g);

/// trace(A^3) computed from the dense product.
double trace_cube(const SymMatrix& a);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    Matrix eigenvectors;              // column i pairs with eigenvalues[i]

    double largest() const { return eigenvalues.front(); }
    double smallest() const { return eigenvalues.back(); }
};

class EigenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Full spectrum by cyclic Jacobi rotations. Stops once the off-diagonal
/// Frobenius norm drops below 1e-12 * ||A||_F.
EigenDecomposition eigen(const SymMatrix& a);

/// Same, starting from an orthonormal `basis` (e.g. the eigenvectors of a
/// nearby matrix); converges in a sweep or two when the basis is close.
EigenDecomposition eigen(const SymMatrix& a, const Matrix& basis);

std::vector<double> eigenvalues(const SymMatrix& a);
double largest_eigenvalue(const SymMatrix& a);
double smallest_eigenvalue(const SymMatrix& a);

/// Rebuilds V diag(f(lambda)) V^T.
SymMatrix reassemble(const EigenDecomposition& e, const std::vector<double>& values);

/// Frobenius-nearest PSD matrix (negative eigenvalues clamped to zero).
SymMatrix psd_project(const SymMatrix& a);

class NotPsdError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vectors x_v with <x_u, x_v> = M(u, v), one coordinate per eigenvalue above
/// the rank cut-off. Eigenvalues in [-kPsdTolerance, 0) are clamped; smaller
/// ones raise NotPsdError.
std::vector<std::vector<double>> gram_factor(const SymMatrix& m);

/// max_r sum_i |A(r, i)|, an upper bound on every |eigenvalue|.
double rowsum_eigen_bound(const SymMatrix& a);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& a);

}  // namespace thetacut

#endif
