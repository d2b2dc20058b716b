#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crlab/config.hpp"
#include "crlab/matrix.hpp"

namespace crlab {

/// A change of bases acting on n x p matrix sets by M -> P * M * Q.
struct Witness {
    Matrix P; // invertible, n x n
    Matrix Q; // invertible, p x p

    Witness(Matrix p_mat, Matrix q_mat);
    static Witness identity(const Field& f, int n, int p);
    Witness inverted() const;
    /// Witness of applying *this first and `after` second.
    Witness then(const Witness& after) const;
};

/// Affine subspace of n x p matrices: a distinguished base point plus an
/// independent translation basis.  The basis is kept canonical (reduced
/// row-echelon form of the flattened matrices), so spaces with the same
/// translation space have identical basis lists; equality of the affine sets
/// is `same_set`, which also accounts for the base point.
class AffineSpace {
public:
    /// Canonicalizes the given translation basis; dependent input collapses.
    AffineSpace(Matrix base, const std::vector<Matrix>& basis);

    const Field& field() const { return base_.field(); }
    int rows() const { return base_.rows(); }
    int cols() const { return base_.cols(); }
    int dim() const { return static_cast<int>(basis_.size()); }

    const Matrix& base() const { return base_; }
    const std::vector<Matrix>& basis() const { return basis_; }

    /// The base point reduced modulo the translation space (zero at every
    /// pivot coordinate); the canonical representative used for serialization.
    Matrix canonical_base() const;

    /// Translation vector space, flattened into F^(rows*cols).
    VectorSubspace translation() const;

    bool contains(const Matrix& m) const;
    bool same_set(const AffineSpace& other) const;

    /// q^dim, or -1 when it exceeds `cap`.
    long long element_count(long long cap) const;

    /// Element base + sum c_i basis_i where (c_1,...,c_d) is the base-q
    /// expansion of `index` with c_1 as the most significant digit; indices
    /// enumerate the space in lexicographic coefficient order.
    Matrix element_at(long long index) const;

    /// Visits all q^dim elements in index order; the visitor returns false to
    /// abort.  Throws ResourceError when the count exceeds opts.cap.
    void for_each(const std::function<bool(long long, const Matrix&)>& visit,
                  const EnumOptions& opts = {}) const;

    std::string to_string() const;

private:
    Matrix base_;
    std::vector<Matrix> basis_;
};

/// P * S * Q; a usage error if the witness is not invertible or shapes
/// disagree.  Dimension is preserved.
AffineSpace transform(const AffineSpace& s, const Witness& w);

/// Independent spanning set of the linear span of the affine set S, i.e. of
/// span({base} union basis); size dim(S) or dim(S)+1.
std::vector<Matrix> linear_span(const AffineSpace& s);

} // namespace crlab
