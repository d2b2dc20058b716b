#pragma once

#include <optional>
#include <utility>

#include "crlab/config.hpp"
#include "crlab/space.hpp"

namespace crlab {

struct ReferenceDims {
    long long d_eq; // C(r,2) + r(n-r): largest constant-rank-r dimension
    long long d_le; // n*r:             largest rank <= r dimension
    long long d_ge; // n*p - C(r+1,2):  largest rank >= r dimension
};

/// Closed-form reference dimensions for shape n >= p >= r >= 1.
ReferenceDims reference_dims(int n, int p, int r);

/// Equivalence-transforms S so the result contains J_r.  The pivot element is
/// the base point when it has rank r, otherwise the lexicographically first
/// enumerated element of rank r (a domain error if none exists within cap).
std::pair<AffineSpace, Witness> normalize(const AffineSpace& s, int r,
                                          const EnumOptions& opts = {});

/// U = sum of the column spaces of the C blocks over the translation space of
/// a space containing J_r; C is linear in the element, so the basis suffices.
VectorSubspace compute_u(const AffineSpace& normalized, int r);

struct InvariantSignature {
    int n = 0, p = 0, r = 0;
    int dim = 0;
    int s = 0, t = 0;
    /// True when (s, t) is an invariant of the equivalence class: the space
    /// has the maximal dimension C(r,2) + r(n-r), p > r, and |F| > r+1.
    /// Otherwise the pair only describes the chosen normalization.
    bool class_invariant = false;

    bool operator==(const InvariantSignature&) const = default;
    std::string to_string() const;
};

/// Normalizes, computes U, and returns the signature (s = dim U, t = r - s).
/// Precondition: constant rank r (certified or asserted by the caller).
InvariantSignature st_invariants(const AffineSpace& s, int r, const EnumOptions& opts = {});

struct Decomposition {
    int s = 0, t = 0;
    Witness witness;                     // transform(input, witness) = wedge(m, n)
    std::optional<AffineSpace> m_space;  // optimal t x t (absent iff t = 0)
    std::optional<AffineSpace> n_space;  // optimal s x s (absent iff s = 0)
};

/// Constructive structure recovery for a constant-rank space of the maximal
/// dimension: certifies constant rank, normalizes to J_r, derives the
/// Flanders-Atkinson block identities, computes (s, t), and produces a
/// witness carrying the space onto wedge(m_space, n_space, n, p) exactly
/// (set equality, asserted).  Every identity used along the way is checked
/// rather than assumed; a violated step surfaces the offending matrix, so
/// the pipeline doubles as a falsification harness outside its hypotheses.
Decomposition decompose_max(const AffineSpace& s, int r, const EnumOptions& opts = {});

/// Brute-force equivalence for tiny instances: scans all witness pairs in
/// GL_n x GL_p (lexicographic encoding order) for one mapping a onto b.
/// |GL_n| * |GL_p| must stay within cap, else a resource error suggests the
/// invariant route.
std::optional<Witness> equiv_exhaustive(const AffineSpace& a, const AffineSpace& b,
                                        const EnumOptions& opts = {});

/// |GL_n(F_q)| (saturating).
long long gl_order(std::uint64_t q, int n);

} // namespace crlab
