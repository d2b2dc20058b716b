#pragma once

#include <optional>
#include <string>

#include "crlab/config.hpp"
#include "crlab/space.hpp"
#include "crlab/verify.hpp"

namespace crlab {

enum class SearchMode { extension, exhaustive };
enum class SearchVerdict { matches_formula, exceeds_formula, below_formula, not_certified };

const char* to_string(SearchMode m);
const char* to_string(SearchVerdict v);

struct SearchOptions {
    SearchMode mode = SearchMode::extension;
    long long cap;
    int threads;
    /// Use the Flanders-Atkinson identities to prune candidate directions
    /// before their full rank scan.  Sound only when q > r+1 (the identities
    /// are theorems there); automatically disabled otherwise.
    bool fa_prune = true;
    SearchOptions();
    SearchOptions(SearchMode m, long long c, int t, bool fa)
        : mode(m), cap(c), threads(t), fa_prune(fa) {}
};

struct SearchReport {
    std::uint64_t q = 0;
    int n = 0, p = 0, r = 0;
    SearchMode mode = SearchMode::extension;
    int found_max_dim = -1; // -1: nothing certified
    long long formula_value = 0; // C(r,2) + r(n-r), evaluated for every q
    SearchVerdict verdict = SearchVerdict::not_certified;
    std::optional<AffineSpace> example_space; // certified constant rank r
    long long spaces_examined = 0;
    double elapsed_seconds = 0.0;
    bool fa_prune_used = false;
    std::string detail;

    std::string to_string() const;
};

/// Certified greatest dimension of a constant-rank-r affine subspace of the
/// n x p matrices over f.
///
/// Extension mode seeds at J_r alone (every constant-rank space is
/// equivalent to one containing J_r, so the restriction loses nothing) and
/// grows translation bases depth-first.  Subspaces are enumerated exactly
/// once through their greedy generator chains (see search.cpp), which makes
/// the covering exhaustive and the result exact.
///
/// Exhaustive mode enumerates raw affine subspaces (echelon bases plus coset
/// representatives) per dimension, starting at formula_value + 1 and moving
/// up or down to bracket the maximum.
///
/// A cap overrun yields a not_certified report, not an error.
SearchReport search_max_dim(const Field& f, int n, int p, int r, const SearchOptions& opts = {});

/// Holds iff no d-dimensional affine subspace of the n x p matrices has
/// constant rank r; full enumeration, violations carry the witness space in
/// the detail text and its base point as the counterexample.
CheckResult certify_no_dim(const Field& f, int n, int p, int r, int d,
                           const EnumOptions& opts = {});

/// search_max_dim with Flanders-Atkinson pruning forced off, for fields with
/// q <= r+1 where the identities are unavailable.  Reports the certified
/// outcome next to the formula value and claims nothing beyond it.
SearchReport probe_small_field(const Field& f, int n, int p, int r,
                               const SearchOptions& opts = {});

} // namespace crlab
