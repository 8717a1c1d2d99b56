#include "pcgen/matrix.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace pcgen {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be a positive finite number");
    }
}

}  // namespace

PCMatrix::PCMatrix(int n) : n_(n) {
    if (n < 1) throw std::domain_error("matrix order must be at least 1");
    m_.assign(static_cast<std::size_t>(n) * n, 1.0);
}

PCMatrix::PCMatrix(int n, std::vector<double> entries) : n_(n), m_(std::move(entries)) {
    if (n < 1) throw std::domain_error("matrix order must be at least 1");
    if (m_.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("entry count does not match matrix order");
    }
    for (double v : m_) require_positive(v, "matrix entry");
}

WeightVector::WeightVector(std::vector<double> values) : v_(std::move(values)) {
    if (v_.empty()) throw std::domain_error("weight vector must not be empty");
    for (double v : v_) require_positive(v, "weight");
}

WeightVector WeightVector::normalized() const {
    // divide out the geometric mean, in log space: product becomes 1
    double log_sum = 0.0;
    for (double v : v_) log_sum += std::log(v);
    const double scale = std::exp(-log_sum / static_cast<double>(v_.size()));
    std::vector<double> out(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) out[i] = v_[i] * scale;
    return WeightVector(std::move(out));
}

PCMatrix from_weights(const WeightVector& w) {
    const int n = w.size();
    PCMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = w[i] / w[j];
        }
    }
    return m;
}

bool is_reciprocal(const PCMatrix& m, double tol) {
    const int n = m.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (std::abs(m(i, j) * m(j, i) - 1.0) > tol) return false;
        }
    }
    return true;
}

double consistency_residual(const PCMatrix& m) {
    const int n = m.order();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const double r = std::abs(m(i, j) * m(j, k) / m(i, k) - 1.0);
                if (r > worst) worst = r;
            }
        }
    }
    return worst;
}

bool is_consistent(const PCMatrix& m, double tol) {
    return consistency_residual(m) <= tol;
}

WeightVector extract_weights(const PCMatrix& m, double tol, std::ostream* diag) {
    if (!is_reciprocal(m, tol)) {
        std::ostream& os = diag ? *diag : std::cerr;
        os << "warning: matrix is not reciprocal within tolerance " << tol
           << "; extracted weights are a geometric-mean fit\n";
    }
    const int n = m.order();
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double log_sum = 0.0;
        for (int j = 0; j < n; ++j) log_sum += std::log(m(i, j));
        w[static_cast<std::size_t>(i)] = std::exp(log_sum / n);
    }
    return WeightVector(std::move(w)).normalized();
}

}  // namespace pcgen
