#pragma once

#include <optional>
#include <vector>

#include "crlab/config.hpp"
#include "crlab/space.hpp"

namespace crlab {

/// I_r + NT_r: base I_r, basis the strictly upper unit matrices.  The
/// canonical optimal space: dim C(r,2), every element invertible.
AffineSpace nt_space(const Field& f, int r);

/// Basis {E_ij - E_ji : i < j} of the alternating matrices (skew-symmetric
/// with zero diagonal; in characteristic 2 this reads E_ij + E_ji, i.e. the
/// symmetric matrices with zero diagonal).  Size C(s,2).
std::vector<Matrix> alternating_basis(const Field& f, int s);

/// First X != 0 (lexicographic order) with X^T P X = 0, if any.
std::optional<std::vector<Elt>> isotropic_witness(const Matrix& p, const EnumOptions& opts = {});

/// X^T P X != 0 for every nonzero X, by exhaustive enumeration.  A singular P
/// is always isotropic (any kernel vector witnesses it), so passing this
/// check implies invertibility.
bool is_nonisotropic(const Matrix& p, const EnumOptions& opts = {});

/// (P_1 + Mata) v ... v (P_d + Mata): base = blockdiag of the forms, basis =
/// per-block alternating bases plus all strictly-upper off-block units.
/// Rejects isotropic forms with a domain error naming the witness vector.
/// The result is optimal in M_N with N = sum of the block sizes.
AffineSpace optimal_from_forms(const std::vector<Matrix>& forms, const EnumOptions& opts = {});

/// Block upper-triangular assembly: diagonal blocks range over the given
/// square spaces, strictly-upper off-diagonal blocks are free.
AffineSpace joint(const std::vector<AffineSpace>& spaces);

/// Extension of a square r x r space W to shape (n, p), n >= p >= r:
///
///     [ W                 0_{r x (p-r)}     ]
///     [ free (n-r) x r    0_{(n-r) x (p-r)} ]
///
/// dim = dim W + r(n-r); constant rank r whenever W has constant rank r.
AffineSpace tilde(const AffineSpace& w, int n, int p);

/// The two-block constant-rank construction for a partition r = s + t, with
/// optimal m_space (t x t, absent iff t = 0) and n_space (s x s, absent iff
/// s = 0), at shape (n, p) with n >= p >= r:
///
///     [ free s x t        N           free s x (p-r) ]
///     [ M                 0_{t x s}   0              ]
///     [ free (n-r) x t    0           0              ]
///
/// dim = C(r,2) + s(p-r) + (n-r)t; every element has rank r.  Optimality of
/// the inputs is verified eagerly (enumeration) and a failure is a domain
/// error.  s = 0 degenerates to tilde(M, n, p).
AffineSpace wedge(const std::optional<AffineSpace>& m_space,
                  const std::optional<AffineSpace>& n_space, int n, int p,
                  const EnumOptions& opts = {});

} // namespace crlab
