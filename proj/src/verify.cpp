#include "crlab/verify.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "crlab/errors.hpp"
#include "crlab/parallel.hpp"

namespace crlab {

namespace {

long long checked_count(const AffineSpace& s, long long cap, const char* what) {
    const long long count = s.element_count(cap);
    if (count < 0)
        throw ResourceError(std::string(what) + ": " + std::to_string(s.field().order()) + "^" +
                            std::to_string(s.dim()) + " elements exceed the cap of " +
                            std::to_string(cap));
    return count;
}

struct FirstOffender {
    long long index = -1; // -1: none
    long long checked = 0;
};

// Scans [0, total) in blocks; `bad` returns true when the element at an index
// violates the property.  Keeps the smallest violating index.
template <typename BadFn>
FirstOffender scan_first_offender(long long total, int threads, BadFn&& bad) {
    return parallel_blocks<FirstOffender>(
        total, threads, FirstOffender{},
        [&bad](long long b, long long e) {
            FirstOffender local;
            for (long long i = b; i < e; ++i) {
                ++local.checked;
                if (bad(i)) {
                    local.index = i;
                    break;
                }
            }
            return local;
        },
        [](FirstOffender& acc, const FirstOffender& part) {
            acc.checked += part.checked;
            if (acc.index < 0 && part.index >= 0) acc.index = part.index;
        });
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        default: return "not_certified";
    }
}

std::string CheckResult::to_string() const {
    std::ostringstream os;
    os << "verdict: " << crlab::to_string(verdict) << "\ninstances_checked: " << instances_checked;
    if (!detail.empty()) os << "\ndetail: " << detail;
    if (counterexample) os << "\ncounterexample:\n" << counterexample->to_string();
    if (!witness_vector.empty()) {
        os << "\nwitness_vector: (";
        for (std::size_t i = 0; i < witness_vector.size(); ++i) {
            if (i) os << ",";
            os << witness_vector[i];
        }
        os << ")";
    }
    return os.str();
}

SampleSpec::SampleSpec() : seed(config::seed()) {}

CheckResult constant_rank(const AffineSpace& s, int r, const EnumOptions& opts,
                          const std::optional<SampleSpec>& sample) {
    CheckResult res;
    if (sample) {
        std::mt19937_64 rng(sample->seed);
        const std::uint64_t q = s.field().order();
        for (long long i = 0; i < sample->count; ++i) {
            Matrix m = s.base();
            for (const auto& b : s.basis()) {
                const Elt c = static_cast<Elt>(rng() % q);
                if (c != 0) m = m + b.scaled(c);
            }
            ++res.instances_checked;
            if (rank(m) != r) {
                res.verdict = Verdict::violated;
                res.counterexample = m;
                res.detail = "rank " + std::to_string(rank(m)) + " != " + std::to_string(r) +
                             " at a sampled element";
                return res;
            }
        }
        res.verdict = Verdict::not_certified;
        res.detail = "sampling passed (" + std::to_string(sample->count) +
                     " draws, seed " + std::to_string(sample->seed) + "); not a certificate";
        return res;
    }
    const long long total = checked_count(s, opts.cap, "constant_rank");
    FirstOffender off = scan_first_offender(total, opts.threads, [&s, r](long long i) {
        return rank(s.element_at(i)) != r;
    });
    res.instances_checked = off.checked;
    if (off.index >= 0) {
        Matrix m = s.element_at(off.index);
        res.verdict = Verdict::violated;
        res.counterexample = m;
        res.detail = "rank " + std::to_string(rank(m)) + " != " + std::to_string(r) +
                     " at enumeration index " + std::to_string(off.index);
    } else {
        res.verdict = Verdict::holds;
        res.detail = "all " + std::to_string(total) + " elements have rank " + std::to_string(r);
    }
    return res;
}

CheckResult trivial_spectrum(const std::vector<Matrix>& basis, const EnumOptions& opts) {
    CheckResult res;
    if (basis.empty()) {
        res.verdict = Verdict::holds;
        res.detail = "zero space";
        res.instances_checked = 1;
        return res;
    }
    const Field& f = basis.front().field();
    const int n = basis.front().rows();
    if (!basis.front().is_square()) throw UsageError("trivial_spectrum: matrices must be square");
    AffineSpace span(Matrix(f, n, n), basis);
    const long long total = checked_count(span, opts.cap, "trivial_spectrum");
    const std::uint64_t q = f.order();
    const Matrix eye = Matrix::identity(f, n);
    FirstOffender off = scan_first_offender(total, opts.threads, [&](long long i) {
        Matrix m = span.element_at(i);
        for (Elt lam = 1; lam < q; ++lam)
            if (determinant(m - eye.scaled(lam)) == 0) return true;
        return false;
    });
    res.instances_checked = off.checked;
    if (off.index >= 0) {
        Matrix m = span.element_at(off.index);
        Elt bad_lambda = 0;
        for (Elt lam = 1; lam < q; ++lam)
            if (determinant(m - eye.scaled(lam)) == 0) {
                bad_lambda = lam;
                break;
            }
        res.verdict = Verdict::violated;
        res.counterexample = m;
        res.witness_vector = {bad_lambda};
        res.detail = "eigenvalue " + std::to_string(bad_lambda) + " in the span";
    } else {
        res.verdict = Verdict::holds;
        res.detail = "no nonzero eigenvalue across " + std::to_string(total) + " span elements";
    }
    return res;
}

CheckResult fa_check(const AffineSpace& s, int r, const EnumOptions& opts) {
    const int n = s.rows();
    const int p = s.cols();
    if (r < 1 || r > std::min(n, p)) throw UsageError("fa_check: rank out of range");
    const Matrix jr = Matrix::j_r(s.field(), n, p, r);
    if (!s.contains(jr)) throw UsageError("fa_check: the space does not contain J_r");
    CheckResult res;
    // D is linear in M, so the basis check covers the whole translation space.
    for (const auto& b : s.basis()) {
        ++res.instances_checked;
        if (!b.block(r, n, r, p).is_zero()) {
            res.verdict = Verdict::violated;
            res.counterexample = b;
            res.detail = "D block nonzero on a translation basis element";
            return res;
        }
    }
    // B A^k C is not linear; enumerate the translation space.
    AffineSpace translation(Matrix(s.field(), n, p), s.basis());
    const long long total = checked_count(translation, opts.cap, "fa_check");
    auto violates = [&](const Matrix& m, int* bad_k) {
        const Matrix a = m.block(0, r, 0, r);
        const Matrix b = m.block(r, n, 0, r);
        Matrix akc = m.block(0, r, r, p);
        for (int k = 0; k < r; ++k) {
            if (!(b * akc).is_zero()) {
                if (bad_k) *bad_k = k;
                return true;
            }
            akc = a * akc;
        }
        return false;
    };
    FirstOffender off = scan_first_offender(total, opts.threads, [&](long long i) {
        Matrix m = translation.element_at(i);
        return violates(m, nullptr);
    });
    res.instances_checked += off.checked;
    if (off.index >= 0) {
        Matrix m = translation.element_at(off.index);
        int bad_k = 0;
        violates(m, &bad_k);
        res.verdict = Verdict::violated;
        res.counterexample = m;
        res.detail = "B A^k C != 0 at k = " + std::to_string(bad_k);
    } else {
        res.verdict = Verdict::holds;
        res.detail = "D = 0 and B A^k C = 0 for k < " + std::to_string(r) + " across " +
                     std::to_string(total) + " translation elements";
    }
    return res;
}

CheckResult is_optimal(const AffineSpace& s, const EnumOptions& opts) {
    if (s.rows() != s.cols()) throw UsageError("is_optimal: space must be square");
    const int n = s.rows();
    const int want = n * (n - 1) / 2;
    if (s.dim() != want) {
        CheckResult res;
        res.verdict = Verdict::violated;
        res.detail = "dim " + std::to_string(s.dim()) + " != C(" + std::to_string(n) + ",2) = " +
                     std::to_string(want);
        return res;
    }
    CheckResult res = constant_rank(s, n, opts);
    if (res.ok())
        res.detail = "dim = C(n,2) and " + res.detail;
    return res;
}

std::vector<int> adapted_vectors(const Field& f, int n, const std::vector<Matrix>& basis) {
    for (const auto& b : basis)
        if (b.rows() != n || b.cols() != n || b.field() != f)
            throw UsageError("adapted_vectors: basis matrices must be n x n over f");
    std::vector<std::vector<Elt>> flat;
    flat.reserve(basis.size());
    for (const auto& b : basis) flat.push_back(b.flatten());
    VectorSubspace space = VectorSubspace::span(f, n * n, flat);
    std::vector<int> adapted;
    for (int i = 0; i < n; ++i) {
        // Matrices with range inside F*e_i live in row i: span{E_{i,j}}.
        std::vector<std::vector<Elt>> gens;
        for (int j = 0; j < n; ++j) gens.push_back(Matrix::unit(f, n, n, i, j).flatten());
        VectorSubspace line_ops = VectorSubspace::span(f, n * n, gens);
        const int inter = space.dim() + line_ops.dim() - space.sum(line_ops).dim();
        if (inter == 0) adapted.push_back(i);
    }
    if (adapted.empty())
        throw InvariantViolation(
            "adapted_vectors: no standard basis vector is adapted; for a trivial spectrum "
            "input this cannot happen, so the precondition was violated");
    return adapted;
}

VectorSubspace transitivity_exclusion(const AffineSpace& s, const EnumOptions& opts) {
    if (s.rows() != s.cols()) throw UsageError("transitivity_exclusion: space must be square");
    const int n = s.rows();
    const Field& f = s.field();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<long long>(f.order());
        if (total > opts.cap)
            throw ResourceError("transitivity_exclusion: q^n exceeds the cap");
    }
    const std::vector<Matrix> span = linear_span(s);
    std::vector<std::vector<Elt>> bad;
    for (long long i = 1; i < total; ++i) {
        const std::vector<Elt> x = vector_at(f, n, i);
        Matrix xm(f, n, 1);
        for (int j = 0; j < n; ++j) xm.set(j, 0, x[static_cast<std::size_t>(j)]);
        std::vector<std::vector<Elt>> images;
        images.reserve(span.size());
        for (const auto& m : span) images.push_back((m * xm).flatten());
        if (static_cast<int>(row_reduce(f, std::move(images)).rows.size()) < n) bad.push_back(x);
    }
    VectorSubspace bad_span = VectorSubspace::span(f, n, bad);
    if (bad_span.dim() >= n && n > 0) {
        throw InvariantViolation(
            "transitivity_exclusion: non-transitive vectors span the whole space; the input "
            "cannot be optimal");
    }
    if (n == 0) return VectorSubspace(f, 0);
    auto h = hyperplane_envelope(bad_span);
    if (!h) throw InvariantViolation("transitivity_exclusion: no enveloping hyperplane");
    return *h;
}

bool ortho_check(const AffineSpace& s, const VectorSubspace& left, const VectorSubspace& right) {
    if (left.ambient_dim() != s.rows() || right.ambient_dim() != s.cols())
        throw UsageError("ortho_check: ambient dimensions must match the space shape");
    std::vector<Matrix> gens = {s.base()};
    gens.insert(gens.end(), s.basis().begin(), s.basis().end());
    const Field& f = s.field();
    for (const auto& xv : left.basis()) {
        Matrix x(f, 1, s.rows());
        for (int j = 0; j < s.rows(); ++j) x.set(0, j, xv[static_cast<std::size_t>(j)]);
        for (const auto& yv : right.basis()) {
            Matrix y(f, s.cols(), 1);
            for (int j = 0; j < s.cols(); ++j) y.set(j, 0, yv[static_cast<std::size_t>(j)]);
            for (const auto& m : gens)
                if ((x * m * y).at(0, 0) != 0) return false;
        }
    }
    return true;
}

OrthoPairReport unique_ortho_pair(const AffineSpace& s, int r, const EnumOptions& opts) {
    if (s.rows() != s.cols()) throw UsageError("unique_ortho_pair: space must be square");
    const int n = s.rows();
    if (r < 0 || r > n) throw UsageError("unique_ortho_pair: rank out of range");
    const Field& f = s.field();
    OrthoPairReport report;
    long long budget = 0;
    for (int d1 = std::max(0, n - r); d1 <= n; ++d1) {
        const int d2 = 2 * n - r - d1;
        if (d2 < 0 || d2 > n) continue;
        const long long c1 = gaussian_binomial(f.order(), n, d1);
        const long long c2 = gaussian_binomial(f.order(), n, d2);
        if (c2 > 0 && c1 > (opts.cap - budget) / c2)
            throw ResourceError("unique_ortho_pair: pair enumeration exceeds the cap");
        budget += c1 * c2;
    }
    for (int d1 = std::max(0, n - r); d1 <= n; ++d1) {
        const int d2 = 2 * n - r - d1;
        if (d2 < 0 || d2 > n) continue;
        for_each_subspace(f, n, d1, [&](const VectorSubspace& left) {
            for_each_subspace(f, n, d2, [&](const VectorSubspace& right) {
                ++report.result.instances_checked;
                if (ortho_check(s, left, right)) report.pairs.emplace_back(left, right);
                return true;
            });
            return true;
        });
    }
    if (report.pairs.size() == 1) {
        report.result.verdict = Verdict::holds;
        report.result.detail = "unique pair: " + report.pairs[0].first.to_string() + " x " +
                               report.pairs[0].second.to_string();
    } else {
        report.result.verdict = Verdict::violated;
        report.result.detail = std::to_string(report.pairs.size()) + " orthogonal pairs found";
    }
    return report;
}

} // namespace crlab
