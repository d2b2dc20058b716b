#pragma once

// Test-only oracles and generators.  The oracles here deliberately avoid the
// library's elimination path: rank and determinants come from Laplace minor
// expansion, membership from coefficient enumeration, so the two routes check
// each other.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "crlab/matrix.hpp"
#include "crlab/space.hpp"

namespace crlab::testing {

inline Elt laplace_det(const Matrix& m) {
    const int n = m.rows();
    const Field& f = m.field();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Elt acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        Matrix sub(f, n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.set(i - 1, cc++, m.at(i, c));
            }
        }
        Elt term = f.mul(m.at(0, j), laplace_det(sub));
        if (j % 2 == 1) term = f.neg(term);
        acc = f.add(acc, term);
    }
    return acc;
}

// Rank as the size of the largest square submatrix with nonzero determinant.
inline int oracle_rank_minors(const Matrix& m) {
    const int n = m.rows();
    const int p = m.cols();
    const Field& f = m.field();
    for (int size = std::min(n, p); size >= 1; --size) {
        std::vector<int> rows(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) rows[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> cols(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) cols[static_cast<std::size_t>(i)] = i;
            while (true) {
                Matrix sub(f, size, size);
                for (int i = 0; i < size; ++i)
                    for (int j = 0; j < size; ++j)
                        sub.set(i, j, m.at(rows[static_cast<std::size_t>(i)],
                                           cols[static_cast<std::size_t>(j)]));
                if (laplace_det(sub) != 0) return size;
                int i = size - 1;
                while (i >= 0 && cols[static_cast<std::size_t>(i)] == p - size + i) --i;
                if (i < 0) break;
                ++cols[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < size; ++j)
                    cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
            }
            int i = size - 1;
            while (i >= 0 && rows[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++rows[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                rows[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return 0;
}

// Membership of v in the span of `gens` by brute-force coefficient
// enumeration; exponential, for tiny instances only.
inline bool oracle_membership(const Field& f, const std::vector<std::vector<Elt>>& gens,
                              const std::vector<Elt>& v) {
    const std::uint64_t q = f.order();
    long long total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) total *= static_cast<long long>(q);
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<Elt> acc(v.size(), 0);
        long long rem = idx;
        for (const auto& g : gens) {
            const Elt c = static_cast<Elt>(rem % static_cast<long long>(q));
            rem /= static_cast<long long>(q);
            for (std::size_t j = 0; j < v.size(); ++j)
                acc[j] = f.add(acc[j], f.mul(c, g[j]));
        }
        if (acc == v) return true;
    }
    return false;
}

inline Matrix random_matrix(std::mt19937& rng, const Field& f, int rows, int cols) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, static_cast<Elt>(rng() % f.order()));
    return m;
}

inline Matrix random_invertible(std::mt19937& rng, const Field& f, int n) {
    while (true) {
        Matrix m = random_matrix(rng, f, n, n);
        if (is_invertible(m)) return m;
    }
}

inline Witness random_witness(std::mt19937& rng, const Field& f, int n, int p) {
    return Witness(random_invertible(rng, f, n), random_invertible(rng, f, p));
}

// Distinct d-dimensional spans obtained from all d-tuples of vectors; the
// independent count oracle for subspace enumeration.
inline long long oracle_count_subspaces(const Field& f, int m, int d) {
    long long total = 1;
    for (int i = 0; i < m * d; ++i) total *= static_cast<long long>(f.order());
    std::set<std::vector<std::vector<Elt>>> seen;
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        std::vector<std::vector<Elt>> vecs;
        for (int k = 0; k < d; ++k) {
            std::vector<Elt> v(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) {
                v[static_cast<std::size_t>(j)] = static_cast<Elt>(rem % static_cast<long long>(f.order()));
                rem /= static_cast<long long>(f.order());
            }
            vecs.push_back(std::move(v));
        }
        VectorSubspace s = VectorSubspace::span(f, m, vecs);
        if (s.dim() == d) seen.insert(s.basis());
    }
    return static_cast<long long>(seen.size());
}

} // namespace crlab::testing
