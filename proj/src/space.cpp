#include "crlab/space.hpp"

#include <sstream>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw UsageError(msg);
}

} // namespace

Witness::Witness(Matrix p_mat, Matrix q_mat) : P(std::move(p_mat)), Q(std::move(q_mat)) {
    require(P.is_square() && Q.is_square(), "witness matrices must be square");
    require(P.field() == Q.field(), "witness matrices over different fields");
}

Witness Witness::identity(const Field& f, int n, int p) {
    return Witness(Matrix::identity(f, n), Matrix::identity(f, p));
}

Witness Witness::inverted() const {
    auto pi = inverse(P);
    auto qi = inverse(Q);
    require(pi && qi, "witness is not invertible");
    return Witness(*pi, *qi);
}

Witness Witness::then(const Witness& after) const {
    // after(P2,Q2) applied to P1 S Q1 gives (P2 P1) S (Q1 Q2).
    return Witness(after.P * P, Q * after.Q);
}

AffineSpace::AffineSpace(Matrix base, const std::vector<Matrix>& basis) : base_(std::move(base)) {
    require(base_.rows() >= 1 && base_.cols() >= 1, "affine space needs a positive shape");
    std::vector<std::vector<Elt>> flat;
    flat.reserve(basis.size());
    for (const auto& b : basis) {
        require(b.rows() == base_.rows() && b.cols() == base_.cols(),
                "basis matrix shape mismatch");
        require(b.field() == base_.field(), "basis matrix over a different field");
        flat.push_back(b.flatten());
    }
    if (!flat.empty()) {
        Echelon e = row_reduce(base_.field(), std::move(flat));
        basis_.reserve(e.rows.size());
        for (auto& row : e.rows)
            basis_.push_back(Matrix::from_flat(base_.field(), base_.rows(), base_.cols(), row));
    }
}

Matrix AffineSpace::canonical_base() const {
    std::vector<Elt> v = base_.flatten();
    const Field& f = field();
    for (const auto& b : basis_) {
        const std::vector<Elt>& row = b.entries();
        int piv = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                piv = static_cast<int>(j);
                break;
            }
        if (piv < 0) continue;
        const Elt c = v[static_cast<std::size_t>(piv)];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
    return Matrix::from_flat(f, rows(), cols(), v);
}

VectorSubspace AffineSpace::translation() const {
    std::vector<std::vector<Elt>> flat;
    flat.reserve(basis_.size());
    for (const auto& b : basis_) flat.push_back(b.flatten());
    return VectorSubspace::span(field(), rows() * cols(), flat);
}

bool AffineSpace::contains(const Matrix& m) const {
    require(m.rows() == rows() && m.cols() == cols(), "contains: shape mismatch");
    return translation().contains((m - base_).flatten());
}

bool AffineSpace::same_set(const AffineSpace& other) const {
    if (rows() != other.rows() || cols() != other.cols() || field() != other.field()) return false;
    if (dim() != other.dim()) return false;
    for (int i = 0; i < dim(); ++i)
        if (basis_[static_cast<std::size_t>(i)] != other.basis_[static_cast<std::size_t>(i)]) return false;
    return contains(other.base_);
}

long long AffineSpace::element_count(long long cap) const {
    const std::uint64_t q = field().order();
    long long count = 1;
    for (int i = 0; i < dim(); ++i) {
        if (count > cap / static_cast<long long>(q)) return -1;
        count *= static_cast<long long>(q);
    }
    return count;
}

Matrix AffineSpace::element_at(long long index) const {
    const std::uint64_t q = field().order();
    Matrix m = base_;
    for (int i = dim(); i-- > 0;) {
        const Elt c = static_cast<Elt>(index % static_cast<long long>(q));
        index /= static_cast<long long>(q);
        if (c != 0) m = m + basis_[static_cast<std::size_t>(i)].scaled(c);
    }
    return m;
}

void AffineSpace::for_each(const std::function<bool(long long, const Matrix&)>& visit,
                           const EnumOptions& opts) const {
    const long long count = element_count(opts.cap);
    if (count < 0) {
        __int128 exact = 1;
        bool huge = false;
        for (int i = 0; i < dim() && !huge; ++i) {
            exact *= static_cast<long long>(field().order());
            huge = exact > (static_cast<__int128>(1) << 62);
        }
        const std::string shown = huge ? (std::to_string(field().order()) + "^" + std::to_string(dim()))
                                       : std::to_string(static_cast<long long>(exact));
        throw ResourceError("space enumeration of " + shown + " elements exceeds the cap of " +
                            std::to_string(opts.cap));
    }
    for (long long i = 0; i < count; ++i)
        if (!visit(i, element_at(i))) return;
}

std::string AffineSpace::to_string() const {
    std::ostringstream os;
    os << "affine space in M_{" << rows() << "," << cols() << "}(" << field().describe()
       << "), dim " << dim();
    return os.str();
}

AffineSpace transform(const AffineSpace& s, const Witness& w) {
    require(w.P.field() == s.field(), "transform: field mismatch");
    require(w.P.rows() == s.rows() && w.Q.rows() == s.cols(), "transform: shape mismatch");
    require(is_invertible(w.P) && is_invertible(w.Q), "transform: witness is not invertible");
    std::vector<Matrix> basis;
    basis.reserve(static_cast<std::size_t>(s.dim()));
    for (const auto& b : s.basis()) basis.push_back(w.P * b * w.Q);
    AffineSpace out(w.P * s.base() * w.Q, basis);
    require(out.dim() == s.dim(), "transform must preserve dimension");
    return out;
}

std::vector<Matrix> linear_span(const AffineSpace& s) {
    std::vector<std::vector<Elt>> flat;
    flat.push_back(s.base().flatten());
    for (const auto& b : s.basis()) flat.push_back(b.flatten());
    Echelon e = row_reduce(s.field(), std::move(flat));
    std::vector<Matrix> out;
    out.reserve(e.rows.size());
    for (auto& row : e.rows) out.push_back(Matrix::from_flat(s.field(), s.rows(), s.cols(), row));
    return out;
}

} // namespace crlab
