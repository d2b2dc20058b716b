#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace crlab {

/// Canonical element encoding: an integer in [0, q) whose base-p digits,
/// little-endian, are the coefficients of the residue polynomial.  0 encodes
/// the additive identity and 1 the multiplicative identity.
using Elt = std::uint32_t;

bool is_prime(std::uint64_t n);

/// True iff `coeffs` (little-endian, monic, length >= 2) is irreducible over
/// GF(p).  Checked by trial division over all monic polynomials of degree at
/// most deg/2; intended for the tiny degrees this library works with.
/// Non-monic input is a usage error.
bool validate_modulus(std::uint32_t p, const std::vector<Elt>& coeffs);

/// Smallest irreducible monic polynomial of degree k over GF(p), where
/// candidates are ordered by the little-endian base-p value of their
/// coefficient list.  This is the built-in modulus table; it makes element
/// encodings reproducible across runs.  For k = 1 returns [0, 1] (the
/// polynomial x), which is never used in arithmetic.
std::vector<Elt> default_modulus(std::uint32_t p, std::uint32_t k);

/// Arithmetic context for GF(p^k).  Cheap-to-copy immutable value; all
/// operations are pure table lookups and safe from any number of threads.
///
/// Table-driven arithmetic bounds the supported order (q <= 1024), far beyond
/// the enumeration scales this library targets.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = 1024;

    /// GF(p^k) with the built-in (default) modulus.
    Field(std::uint32_t p, std::uint32_t k);

    /// GF(p^k) with a user-supplied modulus; rejected unless monic, of length
    /// k+1, and irreducible over GF(p).
    Field(std::uint32_t p, std::uint32_t k, std::vector<Elt> modulus);

    /// Field of the given order; q must be a prime power.
    static Field of_order(std::uint64_t q);

    std::uint32_t characteristic() const;
    std::uint32_t degree() const;
    std::uint64_t order() const;
    const std::vector<Elt>& modulus() const;

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt mul(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    /// Multiplicative inverse; inverting 0 is a domain error.
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const;
    Elt pow(Elt a, std::uint64_t e) const;

    bool is_valid(Elt a) const { return a < order(); }

    /// Raw table view for hot loops; valid while any copy of the Field lives.
    struct Tables {
        const Elt* add;
        const Elt* mul;
        const Elt* neg;
        const Elt* inv;
        std::uint64_t q;
        Elt addf(Elt a, Elt b) const { return add[a * q + b]; }
        Elt mulf(Elt a, Elt b) const { return mul[a * q + b]; }
        Elt negf(Elt a) const { return neg[a]; }
        Elt invf(Elt a) const { return inv[a]; }
    };
    Tables tables() const;

    /// Same (p, k, modulus).
    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::string describe() const; // "GF(9) = GF(3^2), modulus [1,0,1]"

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// All q elements in increasing encoding order: 0, 1, 2, ...
std::vector<Elt> enumerate_field(const Field& f);

} // namespace crlab
