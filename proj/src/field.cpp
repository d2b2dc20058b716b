#include "crlab/field.hpp"

#include <sstream>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

// Little-endian coefficient vectors over GF(p).
using Poly = std::vector<Elt>;

int poly_degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<Elt>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return out;
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm && dm >= 0; da = poly_degree(a)) {
        const Elt c = a[static_cast<std::size_t>(da)];
        for (int i = 0; i <= dm; ++i) {
            auto& coef = a[static_cast<std::size_t>(da - dm + i)];
            const Elt t = static_cast<Elt>(static_cast<std::uint64_t>(c) * m[static_cast<std::size_t>(i)] % p);
            coef = static_cast<Elt>((coef + p - t) % p);
        }
    }
    return a;
}

Poly decode(Elt e, std::uint32_t p, std::uint32_t k) {
    Poly c(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        c[i] = static_cast<Elt>(e % p);
        e /= p;
    }
    return c;
}

Elt encode(const Poly& c, std::uint32_t p, std::uint32_t k) {
    Elt e = 0;
    for (std::uint32_t i = k; i-- > 0;) e = static_cast<Elt>(e * p + (i < c.size() ? c[i] : 0));
    return e;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool validate_modulus(std::uint32_t p, const std::vector<Elt>& coeffs) {
    if (!is_prime(p)) throw UsageError("validate_modulus: characteristic must be prime");
    if (coeffs.size() < 2) throw UsageError("validate_modulus: modulus must have degree >= 1");
    for (Elt c : coeffs)
        if (c >= p) throw UsageError("validate_modulus: coefficient out of range");
    if (coeffs.back() != 1) throw UsageError("validate_modulus: modulus must be monic");
    const int deg = static_cast<int>(coeffs.size()) - 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int dd = 1; dd <= deg / 2; ++dd) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(dd));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly d(static_cast<std::size_t>(dd) + 1, 0);
            std::uint64_t v = idx;
            for (int i = 0; i < dd; ++i) {
                d[static_cast<std::size_t>(i)] = static_cast<Elt>(v % p);
                v /= p;
            }
            d[static_cast<std::size_t>(dd)] = 1;
            if (poly_degree(poly_mod(coeffs, d, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<Elt> default_modulus(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw UsageError("default_modulus: characteristic must be prime");
    if (k == 0) throw UsageError("default_modulus: degree must be >= 1");
    if (k == 1) return {0, 1};
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly m(k + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
            m[i] = static_cast<Elt>(v % p);
            v /= p;
        }
        m[k] = 1;
        if (validate_modulus(p, m)) return m;
    }
    throw DomainError("default_modulus: no irreducible polynomial found"); // unreachable
}

std::vector<Elt> enumerate_field(const Field& f) {
    std::vector<Elt> out(static_cast<std::size_t>(f.order()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elt>(i);
    return out;
}

struct Field::Impl {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint64_t q = 0;
    std::vector<Elt> modulus;
    std::vector<Elt> add_table; // q*q
    std::vector<Elt> mul_table; // q*q
    std::vector<Elt> neg_table; // q
    std::vector<Elt> inv_table; // q, [0] unused

    void build() {
        const std::size_t n = static_cast<std::size_t>(q);
        add_table.resize(n * n);
        mul_table.resize(n * n);
        neg_table.resize(n);
        inv_table.assign(n, 0);
        std::vector<Poly> polys(n);
        for (std::size_t e = 0; e < n; ++e) polys[e] = decode(static_cast<Elt>(e), p, k);
        for (std::size_t a = 0; a < n; ++a) {
            Poly na(k);
            for (std::uint32_t i = 0; i < k; ++i) na[i] = static_cast<Elt>((p - polys[a][i]) % p);
            neg_table[a] = encode(na, p, k);
            for (std::size_t b = 0; b < n; ++b) {
                Poly s(k);
                for (std::uint32_t i = 0; i < k; ++i)
                    s[i] = static_cast<Elt>((polys[a][i] + polys[b][i]) % p);
                add_table[a * n + b] = encode(s, p, k);
                const Poly prod = poly_mod(poly_mul(polys[a], polys[b], p), modulus, p);
                const Elt pe = encode(prod, p, k);
                mul_table[a * n + b] = pe;
                if (pe == 1) inv_table[a] = static_cast<Elt>(b);
            }
        }
    }
};

Field::Field(std::uint32_t p, std::uint32_t k) : Field(p, k, default_modulus(p, k)) {}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<Elt> modulus) {
    if (!is_prime(p)) throw UsageError("Field: characteristic must be prime");
    if (k == 0) throw UsageError("Field: degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) throw UsageError("Field: order exceeds supported maximum (1024)");
    }
    if (modulus.size() != static_cast<std::size_t>(k) + 1)
        throw UsageError("Field: modulus must have length k+1");
    if (k == 1) {
        if (modulus != std::vector<Elt>{0, 1})
            throw UsageError("Field: modulus for a prime field must be [0,1]");
    } else if (!validate_modulus(p, modulus)) {
        throw UsageError("Field: reducible modulus");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = q;
    impl->modulus = std::move(modulus);
    impl->build();
    impl_ = std::move(impl);
}

Field Field::of_order(std::uint64_t q) {
    if (q < 2 || q > kMaxOrder) throw UsageError("Field::of_order: order out of range");
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) p = q;
    }
    std::uint32_t k = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v != 1) throw UsageError("Field::of_order: order is not a prime power");
    return Field(static_cast<std::uint32_t>(p), k);
}

std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->k; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<Elt>& Field::modulus() const { return impl_->modulus; }

Elt Field::add(Elt a, Elt b) const { return impl_->add_table[static_cast<std::size_t>(a) * impl_->q + b]; }
Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }
Elt Field::mul(Elt a, Elt b) const { return impl_->mul_table[static_cast<std::size_t>(a) * impl_->q + b]; }
Elt Field::neg(Elt a) const { return impl_->neg_table[a]; }

Elt Field::inv(Elt a) const {
    if (a == 0) throw DomainError("Field::inv: inverse of zero");
    return impl_->inv_table[a];
}

Elt Field::div(Elt a, Elt b) const { return mul(a, inv(b)); }

Elt Field::pow(Elt a, std::uint64_t e) const {
    Elt r = 1;
    Elt base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Field::Tables Field::tables() const {
    return Tables{impl_->add_table.data(), impl_->mul_table.data(), impl_->neg_table.data(),
                  impl_->inv_table.data(), impl_->q};
}

bool Field::operator==(const Field& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->k == other.impl_->k &&
           impl_->modulus == other.impl_->modulus;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << order() << ")";
    if (degree() > 1) {
        os << " = GF(" << characteristic() << "^" << degree() << "), modulus [";
        for (std::size_t i = 0; i < modulus().size(); ++i) {
            if (i) os << ",";
            os << modulus()[i];
        }
        os << "]";
    }
    return os.str();
}

} // namespace crlab
