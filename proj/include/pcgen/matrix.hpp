#ifndef PCGEN_MATRIX_HPP
#define PCGEN_MATRIX_HPP

#include <iosfwd>
#include <vector>

namespace pcgen {

/// Default relative tolerance for the reciprocity/consistency predicates.
inline constexpr double kDefaultTol = 1e-9;

/// Dense square matrix of positive preference ratios m(i,j) = "how many
/// times entity i outweighs entity j". Indices are zero-based.
class PCMatrix {
public:
    // order n >= 1, all entries initialized to 1
    explicit PCMatrix(int n);
    // row-major entries, size n*n, all strictly positive
    PCMatrix(int n, std::vector<double> entries);

    int order() const noexcept { return n_; }
    double operator()(int i, int j) const { return m_[static_cast<std::size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return m_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const noexcept { return m_; }

private:
    int n_;
    std::vector<double> m_;
};

/// Positive weights of the compared entities, meaningful up to a common
/// scale factor. normalized() picks the canonical representative with
/// product 1, so two weight vectors agree iff their normal forms do.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> values);

    int size() const noexcept { return static_cast<int>(v_.size()); }
    double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const noexcept { return v_; }

    WeightVector normalized() const;

private:
    std::vector<double> v_;
};

/// m(i,j) = w_i / w_j. The result is exactly reciprocal and consistent up
/// to floating round-off.
PCMatrix from_weights(const WeightVector& w);

/// True iff |m(i,j)*m(j,i) - 1| <= tol for all i,j.
bool is_reciprocal(const PCMatrix& m, double tol = kDefaultTol);

/// Worst violation of the transitivity relation m(i,j)*m(j,k) = m(i,k):
/// max over all ordered triples of |m(i,j)*m(j,k)/m(i,k) - 1|.
double consistency_residual(const PCMatrix& m);

/// True iff consistency_residual(m) <= tol.
bool is_consistent(const PCMatrix& m, double tol = kDefaultTol);

/// Row geometric means, renormalized to product 1. For a consistent matrix
/// this inverts from_weights. A matrix that is not reciprocal within tol
/// gets a warning on `diag` (std::cerr when null); computation proceeds.
WeightVector extract_weights(const PCMatrix& m, double tol = kDefaultTol,
                             std::ostream* diag = nullptr);

}  // namespace pcgen

#endif  // PCGEN_MATRIX_HPP
