#include "crlab/construct.hpp"

#include <sstream>

#include "crlab/errors.hpp"
#include "crlab/verify.hpp"

namespace crlab {

AffineSpace nt_space(const Field& f, int r) {
    if (r < 1) throw UsageError("nt_space: r must be >= 1");
    std::vector<Matrix> basis;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) basis.push_back(Matrix::unit(f, r, r, i, j));
    return AffineSpace(Matrix::identity(f, r), basis);
}

std::vector<Matrix> alternating_basis(const Field& f, int s) {
    if (s < 1) throw UsageError("alternating_basis: s must be >= 1");
    std::vector<Matrix> basis;
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            Matrix m(f, s, s);
            m.set(i, j, 1);
            m.set(j, i, f.neg(1));
            basis.push_back(m);
        }
    }
    return basis;
}

std::optional<std::vector<Elt>> isotropic_witness(const Matrix& p, const EnumOptions& opts) {
    if (!p.is_square()) throw UsageError("isotropic_witness: matrix must be square");
    const Field& f = p.field();
    const int s = p.rows();
    long long total = 1;
    for (int i = 0; i < s; ++i) {
        total *= static_cast<long long>(f.order());
        if (total > opts.cap) throw ResourceError("isotropic_witness: q^s exceeds the cap");
    }
    for (long long idx = 1; idx < total; ++idx) {
        const std::vector<Elt> x = vector_at(f, s, idx);
        // X^T P X
        Elt acc = 0;
        for (int i = 0; i < s; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < s; ++j)
                acc = f.add(acc, f.mul(x[static_cast<std::size_t>(i)],
                                       f.mul(p.at(i, j), x[static_cast<std::size_t>(j)])));
        }
        if (acc == 0) return x;
    }
    return std::nullopt;
}

bool is_nonisotropic(const Matrix& p, const EnumOptions& opts) {
    return !isotropic_witness(p, opts).has_value();
}

AffineSpace optimal_from_forms(const std::vector<Matrix>& forms, const EnumOptions& opts) {
    if (forms.empty()) throw UsageError("optimal_from_forms: need at least one form");
    const Field& f = forms.front().field();
    for (const auto& p : forms) {
        if (!p.is_square() || p.rows() < 1)
            throw UsageError("optimal_from_forms: forms must be square and nonempty");
        if (p.field() != f) throw UsageError("optimal_from_forms: forms over different fields");
        if (auto w = isotropic_witness(p, opts)) {
            std::ostringstream os;
            os << "optimal_from_forms: isotropic form, witness X = (";
            for (std::size_t i = 0; i < w->size(); ++i) {
                if (i) os << ",";
                os << (*w)[i];
            }
            os << ") on\n" << p.to_string();
            throw DomainError(os.str());
        }
    }
    std::vector<AffineSpace> blocks;
    blocks.reserve(forms.size());
    for (const auto& p : forms) blocks.emplace_back(p, alternating_basis(f, p.rows()));
    return joint(blocks);
}

AffineSpace joint(const std::vector<AffineSpace>& spaces) {
    if (spaces.empty()) throw UsageError("joint: need at least one space");
    const Field& f = spaces.front().field();
    int total = 0;
    for (const auto& s : spaces) {
        if (s.rows() != s.cols()) throw UsageError("joint: spaces must be square");
        if (s.field() != f) throw UsageError("joint: spaces over different fields");
        total += s.rows();
    }
    Matrix base(f, total, total);
    std::vector<Matrix> basis;
    int off = 0;
    std::vector<int> offsets;
    for (const auto& s : spaces) {
        offsets.push_back(off);
        base.set_block(off, off, s.base());
        for (const auto& b : s.basis()) {
            Matrix m(f, total, total);
            m.set_block(off, off, b);
            basis.push_back(m);
        }
        off += s.rows();
    }
    // Free strictly-upper off-diagonal blocks, row-major unit order.
    for (std::size_t bi = 0; bi < spaces.size(); ++bi) {
        for (std::size_t bj = bi + 1; bj < spaces.size(); ++bj) {
            for (int i = 0; i < spaces[bi].rows(); ++i)
                for (int j = 0; j < spaces[bj].rows(); ++j)
                    basis.push_back(Matrix::unit(f, total, total,
                                                 offsets[bi] + i, offsets[bj] + j));
        }
    }
    return AffineSpace(base, basis);
}

AffineSpace tilde(const AffineSpace& w, int n, int p) {
    if (w.rows() != w.cols()) throw UsageError("tilde: inner space must be square");
    const int r = w.rows();
    if (!(n >= p && p >= r)) throw UsageError("tilde: need n >= p >= r");
    const Field& f = w.field();
    Matrix base(f, n, p);
    base.set_block(0, 0, w.base());
    std::vector<Matrix> basis;
    for (const auto& b : w.basis()) {
        Matrix m(f, n, p);
        m.set_block(0, 0, b);
        basis.push_back(m);
    }
    for (int i = r; i < n; ++i)
        for (int j = 0; j < r; ++j) basis.push_back(Matrix::unit(f, n, p, i, j));
    return AffineSpace(base, basis);
}

AffineSpace wedge(const std::optional<AffineSpace>& m_space,
                  const std::optional<AffineSpace>& n_space, int n, int p,
                  const EnumOptions& opts) {
    if (!m_space && !n_space) throw UsageError("wedge: at least one factor is required");
    const Field f = m_space ? m_space->field() : n_space->field();
    if (m_space && n_space && m_space->field() != n_space->field())
        throw UsageError("wedge: factors over different fields");
    const int t = m_space ? m_space->rows() : 0;
    const int s = n_space ? n_space->rows() : 0;
    const int r = s + t;
    if (m_space && m_space->cols() != t) throw UsageError("wedge: M factor must be square");
    if (n_space && n_space->cols() != s) throw UsageError("wedge: N factor must be square");
    if (!(n >= p && p >= r)) throw UsageError("wedge: need n >= p >= r");
    for (const AffineSpace* part : {m_space ? &*m_space : nullptr, n_space ? &*n_space : nullptr}) {
        if (!part) continue;
        CheckResult opt = is_optimal(*part, opts);
        if (!opt.ok())
            throw DomainError("wedge: factor is not optimal (" + opt.detail + ")");
    }
    // Row bands: [0,s), [s,r), [r,n).  Column bands: [0,t), [t,r), [r,p).
    Matrix base(f, n, p);
    std::vector<Matrix> basis;
    if (n_space) base.set_block(0, t, n_space->base());
    if (m_space) base.set_block(s, 0, m_space->base());
    if (m_space)
        for (const auto& b : m_space->basis()) {
            Matrix m(f, n, p);
            m.set_block(s, 0, b);
            basis.push_back(m);
        }
    if (n_space)
        for (const auto& b : n_space->basis()) {
            Matrix m(f, n, p);
            m.set_block(0, t, b);
            basis.push_back(m);
        }
    for (int i = 0; i < s; ++i) // free s x t block
        for (int j = 0; j < t; ++j) basis.push_back(Matrix::unit(f, n, p, i, j));
    for (int i = 0; i < s; ++i) // free s x (p-r) block
        for (int j = r; j < p; ++j) basis.push_back(Matrix::unit(f, n, p, i, j));
    for (int i = r; i < n; ++i) // free (n-r) x t block
        for (int j = 0; j < t; ++j) basis.push_back(Matrix::unit(f, n, p, i, j));
    return AffineSpace(base, basis);
}

} // namespace crlab
