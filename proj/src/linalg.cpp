#include "thetacut/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace thetacut {

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SymMatrix SymMatrix::identity(std::size_t dim) {
    SymMatrix m(dim);
    m.add_diagonal(1.0);
    return m;
}

SymMatrix SymMatrix::constant(std::size_t dim, double value) {
    SymMatrix m(dim);
    std::fill(m.a_.begin(), m.a_.end(), value);
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    SymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
}

double SymMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
    return t;
}

double SymMatrix::sum() const noexcept { return std::accumulate(a_.begin(), a_.end(), 0.0); }

double SymMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) noexcept {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) noexcept {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) noexcept {
    for (double& x : a_) x *= s;
    return *this;
}

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) noexcept {
    double s = 0.0;
    const std::size_t len = a.dim() * a.dim();
    for (std::size_t i = 0; i < len; ++i) {
        const double d = a.data()[i] - b.data()[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    const std::size_t len = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

SymMatrix gram_matrix(const std::vector<std::vector<double>>& vectors) {
    SymMatrix g(vectors.size());
    for (std::size_t u = 0; u < vectors.size(); ++u)
        for (std::size_t v = u; v < vectors.size(); ++v) g.set(u, v, dot(vectors[u], vectors[v]));
    return g;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.vertex_count());
    for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
    return a;
}

double trace_cube(const SymMatrix& a) {
    const std::size_t n = a.dim();
    double t = 0.0;
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        // row = (A^2)_{i,*}
        std::fill(row.begin(), row.end(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) row[j] += aik * a(k, j);
        }
        for (std::size_t j = 0; j < n; ++j) t += row[j] * a(j, i);
    }
    return t;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-12;

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

// Rotates `a` (full storage) to diagonal form, accumulating into `v`.
void jacobi(Matrix& a, Matrix& v, double scale) {
    const std::size_t n = a.dim();
    const double target = kOffDiagonalTolerance * scale;
    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) return;
        if (sweep == kMaxSweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                double* d = a.data();
                for (std::size_t k = 0; k < n; ++k) {
                    double* rk = d + k * n;
                    const double akp = rk[p];
                    const double akq = rk[q];
                    rk[p] = c * akp - s * akq;
                    rk[q] = s * akp + c * akq;
                }
                double* rp = d + p * n;
                double* rq = d + q * n;
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = rp[k];
                    const double aqk = rq[k];
                    rp[k] = c * apk - s * aqk;
                    rq[k] = s * apk + c * aqk;
                }
                rp[q] = 0.0;
                rq[p] = 0.0;
                double* vd = v.data();
                for (std::size_t k = 0; k < n; ++k) {
                    double* vk = vd + k * n;
                    const double vkp = vk[p];
                    const double vkq = vk[q];
                    vk[p] = c * vkp - s * vkq;
                    vk[q] = s * vkp + c * vkq;
                }
            }
    }
    throw EigenError("Jacobi iteration did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
}

EigenDecomposition sorted(const Matrix& a, const Matrix& v) {
    const std::size_t n = a.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
    EigenDecomposition e{std::vector<double>(n), Matrix(n)};
    for (std::size_t c = 0; c < n; ++c) {
        e.eigenvalues[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < n; ++r) e.eigenvectors(r, c) = v(r, order[c]);
    }
    return e;
}

}  // namespace

EigenDecomposition eigen(const SymMatrix& a) {
    const std::size_t n = a.dim();
    Matrix work(n);
    std::copy(a.data(), a.data() + n * n, work.data());
    Matrix v = Matrix::identity(n);
    jacobi(work, v, a.frobenius_norm());
    return sorted(work, v);
}

EigenDecomposition eigen(const SymMatrix& a, const Matrix& basis) {
    const std::size_t n = a.dim();
    if (basis.dim() != n) return eigen(a);
    // work = B^T A B
    Matrix ab(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* bk = basis.data() + k * n;
            double* out = ab.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) out[j] += aik * bk[j];
        }
    Matrix work(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double* bk = basis.data() + k * n;
        const double* abk = ab.data() + k * n;
        for (std::size_t i = 0; i < n; ++i) {
            const double bki = bk[i];
            if (bki == 0.0) continue;
            double* out = work.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) out[j] += bki * abk[j];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = 0.5 * (work(i, j) + work(j, i));
            work(i, j) = s;
            work(j, i) = s;
        }
    Matrix v = basis;
    jacobi(work, v, a.frobenius_norm());
    return sorted(work, v);
}

std::vector<double> eigenvalues(const SymMatrix& a) { return eigen(a).eigenvalues; }

double largest_eigenvalue(const SymMatrix& a) {
    const auto ev = eigenvalues(a);
    return ev.empty() ? 0.0 : ev.front();
}

double smallest_eigenvalue(const SymMatrix& a) {
    const auto ev = eigenvalues(a);
    return ev.empty() ? 0.0 : ev.back();
}

SymMatrix reassemble(const EigenDecomposition& e, const std::vector<double>& values) {
    const std::size_t n = e.eigenvectors.dim();
    SymMatrix out(n);
    std::vector<double> acc(n * n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        const double lam = values[c];
        if (lam == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const double vi = lam * e.eigenvectors(i, c);
            if (vi == 0.0) continue;
            for (std::size_t j = i; j < n; ++j) acc[i * n + j] += vi * e.eigenvectors(j, c);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out.set(i, j, acc[i * n + j]);
    return out;
}

SymMatrix psd_project(const SymMatrix& a) {
    const auto e = eigen(a);
    std::vector<double> clamped = e.eigenvalues;
    for (double& x : clamped) x = std::max(x, 0.0);
    return reassemble(e, clamped);
}

std::vector<std::vector<double>> gram_factor(const SymMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return {};
    const auto e = eigen(m);
    if (e.smallest() < -kPsdTolerance)
        throw NotPsdError("matrix is not PSD: smallest eigenvalue " + std::to_string(e.smallest()));
    const double cutoff = 1e-10 * std::max(1.0, e.largest());
    std::size_t rank = 0;
    while (rank < n && e.eigenvalues[rank] > cutoff) ++rank;
    std::vector<std::vector<double>> x(n, std::vector<double>(rank, 0.0));
    for (std::size_t k = 0; k < rank; ++k) {
        const double root = std::sqrt(e.eigenvalues[k]);
        for (std::size_t v = 0; v < n; ++v) x[v][k] = root * e.eigenvectors(v, k);
    }
    return x;
}

double rowsum_eigen_bound(const SymMatrix& a) {
    double best = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.dim(); ++i) s += std::abs(a(r, i));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace thetacut
