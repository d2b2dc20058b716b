#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crlab/config.hpp"
#include "crlab/space.hpp"

namespace crlab {

enum class Verdict { holds, violated, not_certified };

const char* to_string(Verdict v);

struct CheckResult {
    Verdict verdict = Verdict::not_certified;
    std::optional<Matrix> counterexample; // present whenever verdict == violated
    std::vector<Elt> witness_vector;      // extra context (eigenvalue, vector, ...)
    std::string detail;
    long long instances_checked = 0;

    bool ok() const { return verdict == Verdict::holds; }
    std::string to_string() const;
};

/// Sampling configuration for the non-certifying mode of constant_rank:
/// `count` elements drawn with the fixed seed; a clean pass is reported as
/// not_certified, never as holds.
struct SampleSpec {
    long long count = 1000;
    std::uint64_t seed;
    SampleSpec();
    SampleSpec(long long c, std::uint64_t s) : count(c), seed(s) {}
};

/// Every element of S has rank exactly r.  Certifying mode enumerates all
/// q^dim elements (partitioned across workers; the counterexample, if any, is
/// the first offender in enumeration order regardless of worker count).
CheckResult constant_rank(const AffineSpace& s, int r, const EnumOptions& opts = {},
                          const std::optional<SampleSpec>& sample = std::nullopt);

/// No element of the linear span of `basis` (square matrices) has a nonzero
/// eigenvalue: det(M - lambda I) != 0 for every enumerated M and lambda != 0.
CheckResult trivial_spectrum(const std::vector<Matrix>& basis, const EnumOptions& opts = {});

/// Flanders-Atkinson identities for a space containing J_r: every element M
/// of the translation space satisfies D(M) = 0 and B(M) A(M)^k C(M) = 0.
/// The exponent is capped at k <= r-1: A(M) is r x r, so by Cayley-Hamilton
/// every higher power is a linear combination of lower ones, which makes the
/// finite check equivalent to the unbounded family.
CheckResult fa_check(const AffineSpace& s, int r, const EnumOptions& opts = {});

/// Square space included in the invertibles with dim = C(n,2).
CheckResult is_optimal(const AffineSpace& s, const EnumOptions& opts = {});

/// 0-based indices i such that the linear space spanned by `basis` (inside
/// the n x n matrices over f) contains no nonzero matrix whose range lies in
/// F*e_i.  Pure linear algebra.  Precondition: trivial_spectrum holds; under
/// it the result is provably nonempty, and an empty result raises
/// InvariantViolation.
std::vector<int> adapted_vectors(const Field& f, int n, const std::vector<Matrix>& basis);

/// A hyperplane H such that span(S) * X = F^n for every X outside H, for an
/// optimal space S.  Raises InvariantViolation if the bad vectors span F^n
/// (impossible for genuinely optimal inputs).
VectorSubspace transitivity_exclusion(const AffineSpace& s, const EnumOptions& opts = {});

/// X^T M Y = 0 for all X in `left`, Y in `right`, M in S.  Bilinearity plus
/// affinity make the finite check over basis vectors and {base} + basis
/// complete; no enumeration happens.
bool ortho_check(const AffineSpace& s, const VectorSubspace& left, const VectorSubspace& right);

struct OrthoPairReport {
    CheckResult result; // holds iff exactly one pair satisfies ortho_check
    std::vector<std::pair<VectorSubspace, VectorSubspace>> pairs;
};

/// Enumerates every subspace pair (F', G') of F^n with
/// dim F' + dim G' = 2n - r and reports the pairs orthogonal under S.
OrthoPairReport unique_ortho_pair(const AffineSpace& s, int r, const EnumOptions& opts = {});

} // namespace crlab
