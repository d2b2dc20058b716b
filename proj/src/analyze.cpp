#include "crlab/analyze.hpp"

#include <algorithm>
#include <sstream>

#include "crlab/construct.hpp"
#include "crlab/errors.hpp"
#include "crlab/verify.hpp"

namespace crlab {

namespace {

[[noreturn]] void violated(const std::string& step, const Matrix& offender) {
    throw InvariantViolation("decompose_max: " + step + "; offending matrix:\n" +
                             offender.to_string());
}

// Basis of the subspace of span(basis) whose flattened coordinates vanish at
// `zero_positions`, expressed as matrices again.
std::vector<Matrix> constrained_subspace(const Field& f, const std::vector<Matrix>& basis,
                                         const std::vector<int>& zero_positions) {
    if (basis.empty()) return {};
    const int d = static_cast<int>(basis.size());
    Matrix cond(f, static_cast<int>(zero_positions.size()), d);
    for (int row = 0; row < static_cast<int>(zero_positions.size()); ++row)
        for (int j = 0; j < d; ++j)
            cond.set(row, j,
                     basis[static_cast<std::size_t>(j)]
                         .entries()[static_cast<std::size_t>(zero_positions[static_cast<std::size_t>(row)])]);
    std::vector<Matrix> out;
    for (const auto& coeff : kernel_basis(cond)) {
        Matrix m(f, basis.front().rows(), basis.front().cols());
        for (int j = 0; j < d; ++j)
            if (coeff[static_cast<std::size_t>(j)] != 0)
                m = m + basis[static_cast<std::size_t>(j)].scaled(coeff[static_cast<std::size_t>(j)]);
        out.push_back(m);
    }
    return out;
}

std::vector<int> block_positions(int rows, int cols, int r0, int r1, int c0, int c1) {
    std::vector<int> out;
    (void)rows;
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) out.push_back(i * cols + j);
    return out;
}

// Canonical span of the given block of each basis matrix, as a matrix list.
std::vector<Matrix> block_span(const Field& f, const std::vector<Matrix>& basis, int r0, int r1,
                               int c0, int c1) {
    std::vector<std::vector<Elt>> flat;
    for (const auto& b : basis) flat.push_back(b.block(r0, r1, c0, c1).flatten());
    Echelon e = row_reduce(f, std::move(flat));
    std::vector<Matrix> out;
    for (auto& row : e.rows) out.push_back(Matrix::from_flat(f, r1 - r0, c1 - c0, row));
    return out;
}

// For an affine space T of m x r matrices (m >= r >= 1) of constant rank r
// and dimension C(r,2) + r(m-r) that contains [I_r; 0]: a matrix X with
//
//     A(v) + X B(v) in A(T')   for every translation element v,
//
// where T' = {v : B(v) = 0}.  The row operation [[I, X], [0, I]] then carries
// T onto the product {[W; B] : W in W_aff, B free} with W_aff = I_r + A(T')
// optimal.  Solvability and the dimension identities below are theorems for
// valid inputs; violations are surfaced, not patched.
struct TildeExtract {
    Matrix x;            // r x (m - r)
    AffineSpace w_space; // optimal r x r
};

TildeExtract tilde_extract(const AffineSpace& t, int r) {
    const Field& f = t.field();
    const int m = t.rows();
    if (t.cols() != r || m < r || r < 1) throw UsageError("tilde_extract: bad shape");
    if (!t.contains(Matrix::j_r(f, m, r, r)))
        throw UsageError("tilde_extract: space does not contain [I_r; 0]");
    const std::vector<Matrix>& basis = t.basis();
    const int d = t.dim();
    const int want_w = r * (r - 1) / 2;
    if (d != want_w + r * (m - r))
        violated("tilde step: dimension is not C(r,2) + r(m-r)", t.base());

    std::vector<Matrix> t_prime =
        constrained_subspace(f, basis, block_positions(m, r, r, m, 0, r));
    if (static_cast<int>(t_prime.size()) != want_w)
        violated("tilde step: dim{v : B(v) = 0} != C(r,2)", t.base());
    std::vector<Matrix> w_vec = block_span(f, t_prime, 0, r, 0, r);
    if (static_cast<int>(w_vec.size()) != want_w)
        violated("tilde step: A is not injective on {B = 0}", t.base());
    if (static_cast<int>(block_span(f, basis, r, m, 0, r).size()) != r * (m - r))
        violated("tilde step: B is not surjective on the translation space", t.base());

    Matrix x(f, r, m - r);
    if (m > r && d > 0) {
        // Unknowns: vec(X) row-major, then one coefficient per (basis elt,
        // W generator) pair.  Equations: r*r per basis element.
        const int nx = r * (m - r);
        const int nl = static_cast<int>(w_vec.size());
        const int cols = nx + d * nl;
        Matrix sys(f, d * r * r, cols);
        std::vector<Elt> rhs(static_cast<std::size_t>(d * r * r), 0);
        for (int j = 0; j < d; ++j) {
            const Matrix a = basis[static_cast<std::size_t>(j)].block(0, r, 0, r);
            const Matrix b = basis[static_cast<std::size_t>(j)].block(r, m, 0, r);
            for (int ea = 0; ea < r; ++ea) {
                for (int eb = 0; eb < r; ++eb) {
                    const int row = j * r * r + ea * r + eb;
                    for (int c = 0; c < m - r; ++c) sys.set(row, ea * (m - r) + c, b.at(c, eb));
                    for (int i = 0; i < nl; ++i)
                        sys.set(row, nx + j * nl + i,
                                f.neg(w_vec[static_cast<std::size_t>(i)].at(ea, eb)));
                    rhs[static_cast<std::size_t>(row)] = f.neg(a.at(ea, eb));
                }
            }
        }
        auto sol = solve_linear(sys, rhs);
        if (!sol) violated("tilde step: no row operation aligns A with A({B = 0})", t.base());
        for (int ea = 0; ea < r; ++ea)
            for (int c = 0; c < m - r; ++c)
                x.set(ea, c, (*sol)[static_cast<std::size_t>(ea * (m - r) + c)]);
    }
    AffineSpace w_aff(Matrix::identity(f, r), w_vec);
    CheckResult opt = is_optimal(w_aff);
    if (!opt.ok()) {
        if (opt.counterexample) violated("tilde step: recovered core is not optimal", *opt.counterexample);
        violated("tilde step: recovered core is not optimal", w_aff.base());
    }
    return TildeExtract{x, w_aff};
}

} // namespace

ReferenceDims reference_dims(int n, int p, int r) {
    if (!(n >= p && p >= r && r >= 1)) throw UsageError("reference_dims: need n >= p >= r >= 1");
    ReferenceDims d{};
    d.d_eq = static_cast<long long>(r) * (r - 1) / 2 + static_cast<long long>(r) * (n - r);
    d.d_le = static_cast<long long>(n) * r;
    d.d_ge = static_cast<long long>(n) * p - static_cast<long long>(r + 1) * r / 2;
    return d;
}

std::pair<AffineSpace, Witness> normalize(const AffineSpace& s, int r, const EnumOptions& opts) {
    if (r < 1 || r > std::min(s.rows(), s.cols())) throw UsageError("normalize: rank out of range");
    std::optional<Matrix> pivot;
    if (rank(s.base()) == r) {
        pivot = s.base();
    } else {
        const long long count = s.element_count(opts.cap);
        if (count < 0) throw ResourceError("normalize: enumeration for a rank-r element exceeds the cap");
        for (long long i = 0; i < count; ++i) {
            Matrix m = s.element_at(i);
            if (rank(m) == r) {
                pivot = m;
                break;
            }
        }
    }
    if (!pivot) throw DomainError("normalize: the space contains no rank-" + std::to_string(r) +
                                  " element");
    auto [pm, qm] = rank_decomposition(*pivot);
    Witness w(pm, qm);
    AffineSpace out = transform(s, w);
    if (!out.contains(Matrix::j_r(s.field(), s.rows(), s.cols(), r)))
        throw InvariantViolation("normalize: transformed space misses J_r");
    return {out, w};
}

VectorSubspace compute_u(const AffineSpace& normalized, int r) {
    const int n = normalized.rows();
    const int p = normalized.cols();
    if (r < 1 || r > std::min(n, p)) throw UsageError("compute_u: rank out of range");
    if (!normalized.contains(Matrix::j_r(normalized.field(), n, p, r)))
        throw UsageError("compute_u: space does not contain J_r");
    std::vector<std::vector<Elt>> cols;
    for (const auto& b : normalized.basis()) {
        const Matrix c = b.block(0, r, r, p);
        for (int j = 0; j < c.cols(); ++j) {
            std::vector<Elt> col(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) col[static_cast<std::size_t>(i)] = c.at(i, j);
            cols.push_back(std::move(col));
        }
    }
    return VectorSubspace::span(normalized.field(), r, cols);
}

std::string InvariantSignature::to_string() const {
    std::ostringstream os;
    os << "n=" << n << " p=" << p << " r=" << r << " dim=" << dim << " s=" << s << " t=" << t
       << " class_invariant=" << (class_invariant ? "yes" : "no");
    return os.str();
}

InvariantSignature st_invariants(const AffineSpace& space, int r, const EnumOptions& opts) {
    auto [normalized, w] = normalize(space, r, opts);
    (void)w;
    VectorSubspace u = compute_u(normalized, r);
    InvariantSignature sig;
    sig.n = space.rows();
    sig.p = space.cols();
    sig.r = r;
    sig.dim = space.dim();
    sig.s = u.dim();
    sig.t = r - sig.s;
    const ReferenceDims ref = reference_dims(sig.n, sig.p, r);
    sig.class_invariant = sig.dim == ref.d_eq && sig.p > r &&
                          space.field().order() > static_cast<std::uint64_t>(r) + 1;
    return sig;
}

Decomposition decompose_max(const AffineSpace& input, int r, const EnumOptions& opts) {
    const int n = input.rows();
    const int p = input.cols();
    if (!(n >= p && p >= r && r >= 1)) throw UsageError("decompose_max: need n >= p >= r >= 1");
    const ReferenceDims ref = reference_dims(n, p, r);
    if (input.dim() != ref.d_eq)
        throw UsageError("decompose_max: dim " + std::to_string(input.dim()) +
                         " != " + std::to_string(ref.d_eq) + " = C(r,2) + r(n-r)");
    const Field& f = input.field();
    {
        CheckResult cr = constant_rank(input, r, opts);
        if (!cr.ok()) {
            if (cr.counterexample) violated("input is not constant rank", *cr.counterexample);
            throw InvariantViolation("decompose_max: input is not constant rank");
        }
    }

    auto [space, witness] = normalize(input, r, opts);
    space = AffineSpace(Matrix::j_r(f, n, p, r), space.basis()); // rebase at J_r

    {
        CheckResult fa = fa_check(space, r, opts);
        if (!fa.ok()) {
            if (fa.counterexample) violated("Flanders-Atkinson identities fail", *fa.counterexample);
            throw InvariantViolation("decompose_max: Flanders-Atkinson identities fail");
        }
    }

    VectorSubspace u = compute_u(space, r);
    const int s = u.dim();
    const int t = r - s;
    if (n > p && s != 0) violated("n > p forces s = 0 and it is not", space.base());

    // Refine coordinates so U becomes F^s x {0}: columns of E are the
    // echelon basis of U extended by standard vectors, acting on the leading
    // r x r block from both sides (J_r is preserved).
    if (s > 0) {
        std::vector<std::vector<Elt>> cols = u.basis();
        for (int cand = 0; cand < r && static_cast<int>(cols.size()) < r; ++cand) {
            std::vector<Elt> e(static_cast<std::size_t>(r), 0);
            e[static_cast<std::size_t>(cand)] = 1;
            std::vector<std::vector<Elt>> probe = cols;
            probe.push_back(e);
            if (static_cast<int>(row_reduce(f, probe).rows.size()) > static_cast<int>(cols.size()))
                cols.push_back(e);
        }
        Matrix e_mat(f, r, r);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) e_mat.set(i, j, cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        const auto e_inv = inverse(e_mat);
        if (!e_inv) throw InvariantViolation("decompose_max: U basis extension is singular");
        Matrix pmat = Matrix::identity(f, n);
        pmat.set_block(0, 0, *e_inv);
        Matrix qmat = Matrix::identity(f, p);
        qmat.set_block(0, 0, e_mat);
        Witness refine(pmat, qmat);
        space = transform(space, refine);
        witness = witness.then(refine);
        space = AffineSpace(Matrix::j_r(f, n, p, r), space.basis());
        // Sanity: U is now the span of the first s standard vectors.
        VectorSubspace u2 = compute_u(space, r);
        std::vector<std::vector<Elt>> std_rows;
        for (int i = 0; i < s; ++i) {
            std::vector<Elt> e(static_cast<std::size_t>(r), 0);
            e[static_cast<std::size_t>(i)] = 1;
            std_rows.push_back(e);
        }
        if (u2 != VectorSubspace::span(f, r, std_rows))
            violated("refinement failed to send U to F^s x 0", space.base());
    }

    // T: translation elements with B and C blocks zero; its A blocks form the
    // optimal core of the leading r x r corner.
    std::vector<int> bc_positions = block_positions(n, p, r, n, 0, r);
    {
        std::vector<int> c_pos = block_positions(n, p, 0, r, r, p);
        bc_positions.insert(bc_positions.end(), c_pos.begin(), c_pos.end());
    }
    const std::vector<Matrix> t_vec = constrained_subspace(f, space.basis(), bc_positions);
    if (static_cast<int>(t_vec.size()) != r * (r - 1) / 2)
        violated("dim of {B = C = 0} is not C(r,2)", space.base());
    std::vector<Matrix> a_t_vec;
    a_t_vec.reserve(t_vec.size());
    for (const auto& m : t_vec) a_t_vec.push_back(m.block(0, r, 0, r));

    // B(M) A' C(M) = 0 for every A' in the core affine space; linear in A',
    // so I_r plus the core basis covers it.  Enumerated over the translation
    // space since the identity is quadratic in M.
    {
        AffineSpace translation(Matrix(f, n, p), space.basis());
        std::vector<Matrix> a_primes = {Matrix::identity(f, r)};
        a_primes.insert(a_primes.end(), a_t_vec.begin(), a_t_vec.end());
        const long long count = translation.element_count(opts.cap);
        if (count < 0) throw ResourceError("decompose_max: translation enumeration exceeds the cap");
        for (long long i = 0; i < count; ++i) {
            Matrix m = translation.element_at(i);
            const Matrix bblk = m.block(r, n, 0, r);
            const Matrix cblk = m.block(0, r, r, p);
            for (const auto& ap : a_primes)
                if (!(bblk * ap * cblk).is_zero())
                    violated("B A' C != 0 for a core element A'", m);
        }
    }

    for (const auto& m : t_vec)
        if (!m.block(s, r, 0, s).is_zero())
            violated("core does not leave F^s x 0 invariant", m);
    for (const auto& b : space.basis()) {
        if (!b.block(r, n, 0, s).is_zero()) violated("B_1 block is nonzero", b);
        if (!b.block(s, r, 0, s).is_zero()) violated("lower-left corner of A is nonzero", b);
        if (!b.block(s, r, r, p).is_zero()) violated("C block has nonzero lower rows", b);
    }

    // Permute columns to the wedge order: [s, r), then [0, s), then [r, p).
    {
        Matrix perm(f, p, p);
        for (int j = 0; j < t; ++j) perm.set(s + j, j, 1);
        for (int j = 0; j < s; ++j) perm.set(j, t + j, 1);
        for (int j = r; j < p; ++j) perm.set(j, j, 1);
        Witness col_perm(Matrix::identity(f, n), perm);
        space = transform(space, col_perm);
        witness = witness.then(col_perm);
    }
    Matrix base_perm(f, n, p); // the permuted J_r: I_t at (s,0), I_s at (0,t)
    for (int i = 0; i < t; ++i) base_perm.set(s + i, i, 1);
    for (int i = 0; i < s; ++i) base_perm.set(i, t + i, 1);
    if (!space.contains(base_perm)) violated("permuted space misses its base point", base_perm);
    space = AffineSpace(base_perm, space.basis());

    std::optional<AffineSpace> m_space;
    std::optional<AffineSpace> n_space;

    if (t > 0) {
        // K part: rows [s, n) x cols [0, t).
        std::vector<Matrix> k_basis;
        for (const auto& b : space.basis()) k_basis.push_back(b.block(s, n, 0, t));
        AffineSpace k_aff(Matrix::j_r(f, n - s, t, t), k_basis);
        TildeExtract ke = tilde_extract(k_aff, t);
        Matrix pmat = Matrix::identity(f, n);
        pmat.set_block(s, r, ke.x); // rows [s,r) += X * rows [r,n)
        Witness row_fix(pmat, Matrix::identity(f, p));
        space = transform(space, row_fix);
        witness = witness.then(row_fix);
        space = AffineSpace(base_perm, space.basis());
        m_space = ke.w_space;
    }
    if (s > 0) {
        // L part, transposed: cols [t, p) x rows [0, s).
        std::vector<Matrix> l_basis;
        for (const auto& b : space.basis()) l_basis.push_back(b.block(0, s, t, p).transposed());
        AffineSpace l_aff(Matrix::j_r(f, p - t, s, s), l_basis);
        TildeExtract le = tilde_extract(l_aff, s);
        Matrix qmat = Matrix::identity(f, p);
        for (int i = 0; i < p - r; ++i) // cols [t,r) += cols [r,p) * X^T
            for (int j = 0; j < s; ++j) qmat.set(r + i, t + j, le.x.at(j, i));
        Witness col_fix(Matrix::identity(f, n), qmat);
        space = transform(space, col_fix);
        witness = witness.then(col_fix);
        space = AffineSpace(base_perm, space.basis());
        AffineSpace wn = le.w_space;
        std::vector<Matrix> nt_basis;
        for (const auto& b : wn.basis()) nt_basis.push_back(b.transposed());
        n_space = AffineSpace(wn.base().transposed(), nt_basis);
    }

    AffineSpace rebuilt = wedge(m_space, n_space, n, p, opts);
    if (!rebuilt.same_set(space))
        violated("final space does not match the wedge of its recovered cores", space.base());
    if (!transform(input, witness).same_set(rebuilt))
        violated("witness does not carry the input onto the wedge form", input.base());

    Decomposition out{s, t, witness, std::move(m_space), std::move(n_space)};
    return out;
}

long long gl_order(std::uint64_t q, int n) {
    constexpr long long kSat = (1LL << 62);
    __int128 acc = 1;
    __int128 qn = 1;
    for (int i = 0; i < n; ++i) qn *= static_cast<long long>(q);
    __int128 qi = 1;
    for (int i = 0; i < n; ++i) {
        acc *= (qn - qi);
        if (acc > kSat) return kSat;
        qi *= static_cast<long long>(q);
    }
    return static_cast<long long>(acc);
}

std::optional<Witness> equiv_exhaustive(const AffineSpace& a, const AffineSpace& b,
                                        const EnumOptions& opts) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
        return std::nullopt;
    if (a.dim() != b.dim()) return std::nullopt;
    const Field& f = a.field();
    const int n = a.rows();
    const int p = a.cols();
    const long long gl_n = gl_order(f.order(), n);
    const long long gl_p = gl_order(f.order(), p);
    if (gl_n > opts.cap || gl_p > opts.cap || gl_n > opts.cap / gl_p)
        throw ResourceError(
            "equiv_exhaustive: |GL_n| * |GL_p| witness pairs (" + std::to_string(gl_n) + " x " +
            std::to_string(gl_p) + ") exceed the cap of " + std::to_string(opts.cap) +
            "; raise the cap or use st_invariants as a necessary-condition filter");
    auto enumerate_gl = [&f, &opts](int size) {
        long long total = 1;
        for (int i = 0; i < size * size; ++i) {
            total *= static_cast<long long>(f.order());
            if (total > opts.cap)
                throw ResourceError("equiv_exhaustive: GL enumeration exceeds the cap");
        }
        std::vector<Matrix> out;
        for (long long idx = 0; idx < total; ++idx) {
            Matrix m = Matrix::from_flat(f, size, size, vector_at(f, size * size, idx));
            if (is_invertible(m)) out.push_back(std::move(m));
        }
        return out;
    };
    const std::vector<Matrix> left_group = enumerate_gl(n);
    const std::vector<Matrix> right_group = n == p ? left_group : enumerate_gl(p);
    for (const auto& pm : left_group) {
        for (const auto& qm : right_group) {
            Witness w(pm, qm);
            if (transform(a, w).same_set(b)) return w;
        }
    }
    return std::nullopt;
}

} // namespace crlab
