#include "crlab/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw UsageError(msg);
}

void require_same_field(const Field& a, const Field& b) {
    require(a == b, "matrix operands live over different fields");
}

} // namespace

Matrix::Matrix(Field f, int rows, int cols)
    : f_(std::move(f)), rows_(rows), cols_(cols),
      e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    require(rows >= 0 && cols >= 0, "matrix shape must be non-negative");
}

Matrix::Matrix(Field f, int rows, int cols, std::vector<Elt> entries)
    : f_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    require(rows >= 0 && cols >= 0, "matrix shape must be non-negative");
    require(e_.size() == static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            "entry count does not match shape");
    for (Elt v : e_) require(f_.is_valid(v), "matrix entry out of range for the field");
}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(std::move(f), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::unit(Field f, int rows, int cols, int i, int j) {
    Matrix m(std::move(f), rows, cols);
    m.set(i, j, 1);
    return m;
}

Matrix Matrix::j_r(Field f, int rows, int cols, int r) {
    require(r >= 0 && r <= std::min(rows, cols), "rank block exceeds shape");
    Matrix m(std::move(f), rows, cols);
    for (int i = 0; i < r; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Elt>>& rows) {
    require(!rows.empty(), "from_rows: empty row list");
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());
    Matrix m(std::move(f), r, c);
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == c,
                "from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Elt v) { return v == 0; });
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(f_, o.f_);
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in matrix addition");
    Matrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.add(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(f_, o.f_);
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in matrix subtraction");
    Matrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.sub(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(f_, o.f_);
    require(cols_ == o.rows_, "shape mismatch in matrix product");
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Elt a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Elt t = f_.mul(a, o.at(k, j));
                r.set(i, j, f_.add(r.at(i, j), t));
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(Elt c) const {
    Matrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.mul(e_[i], c);
    return r;
}

Matrix Matrix::negated() const {
    Matrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.neg(e_[i]);
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::block(int r0, int r1, int c0, int c1) const {
    require(0 <= r0 && r0 <= r1 && r1 <= rows_ && 0 <= c0 && c0 <= c1 && c1 <= cols_,
            "block out of range");
    Matrix b(f_, r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) b.set(i - r0, j - c0, at(i, j));
    return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "block out of range");
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) set(r0 + i, c0 + j, b.at(i, j));
}

Matrix Matrix::from_flat(Field f, int rows, int cols, const std::vector<Elt>& flat) {
    return Matrix(std::move(f), rows, cols, flat);
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    if (rows_ == 0 || cols_ == 0) os << "[" << rows_ << "x" << cols_ << "]";
    return os.str();
}

Echelon row_reduce(const Field& f, std::vector<std::vector<Elt>> rows) {
    Echelon out;
    if (rows.empty()) return out;
    const std::size_t m = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Elt ipv = f.inv(rows[r][col]);
        for (std::size_t j = col; j < m; ++j) rows[r][j] = f.mul(rows[r][j], ipv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Elt c = rows[i][col];
            for (std::size_t j = col; j < m; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
        }
        out.pivots.push_back(static_cast<int>(col));
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<std::vector<Elt>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    }
    return static_cast<int>(row_reduce(m.field(), std::move(rows)).rows.size());
}

Elt determinant(const Matrix& m) {
    require(m.is_square(), "determinant of a non-square matrix");
    const Field& f = m.field();
    const int n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Elt>> a(static_cast<std::size_t>(n), std::vector<Elt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    Elt det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
            det = f.neg(det);
        }
        const Elt pv = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det = f.mul(det, pv);
        const Elt ipv = f.inv(pv);
        for (int i = col + 1; i < n; ++i) {
            const Elt c = f.mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)], ipv);
            if (c == 0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    f.sub(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                          f.mul(c, a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]));
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    require(m.is_square(), "inverse of a non-square matrix");
    const Field& f = m.field();
    const int n = m.rows();
    // Reduce [M | I]; M invertible iff the left part reaches I.
    std::vector<std::vector<Elt>> aug(static_cast<std::size_t>(n),
                                      std::vector<Elt>(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    Echelon e = row_reduce(f, std::move(aug));
    if (static_cast<int>(e.rows.size()) != n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (e.pivots[static_cast<std::size_t>(i)] != i) return std::nullopt;
    Matrix inv(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.set(i, j, e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)]);
    return inv;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::pair<Matrix, Matrix> rank_decomposition(const Matrix& m) {
    const Field& f = m.field();
    const int n = m.rows();
    const int p = m.cols();
    // Row stage: track the row operations on an attached identity, giving
    // invertible P with (P*M) in reduced echelon form.
    std::vector<std::vector<Elt>> aug(static_cast<std::size_t>(n),
                                      std::vector<Elt>(static_cast<std::size_t>(p + n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(p + i)] = 1;
    }
    // Eliminate using only the first p columns as pivot candidates.
    std::vector<int> pivots;
    {
        std::size_t r = 0;
        for (int col = 0; col < p && r < aug.size(); ++col) {
            std::size_t piv = r;
            while (piv < aug.size() && aug[piv][static_cast<std::size_t>(col)] == 0) ++piv;
            if (piv == aug.size()) continue;
            std::swap(aug[r], aug[piv]);
            const Elt ipv = f.inv(aug[r][static_cast<std::size_t>(col)]);
            for (std::size_t j = 0; j < aug[r].size(); ++j) aug[r][j] = f.mul(aug[r][j], ipv);
            for (std::size_t i = 0; i < aug.size(); ++i) {
                if (i == r || aug[i][static_cast<std::size_t>(col)] == 0) continue;
                const Elt c = aug[i][static_cast<std::size_t>(col)];
                for (std::size_t j = 0; j < aug[i].size(); ++j)
                    aug[i][j] = f.sub(aug[i][j], f.mul(c, aug[r][j]));
            }
            pivots.push_back(col);
            ++r;
        }
    }
    const int rk = static_cast<int>(pivots.size());
    Matrix pmat(f, n, n);
    Matrix ech(f, n, p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) ech.set(i, j, aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        for (int j = 0; j < n; ++j) pmat.set(i, j, aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(p + j)]);
    }
    // Column stage on the echelon form: clear the non-pivot columns (each
    // pivot column is a unit vector, so one subtraction per entry suffices),
    // then permute the pivot columns to the front.  Apply the same column
    // operations to an identity to accumulate Q.
    Matrix qmat = Matrix::identity(f, p);
    std::vector<bool> is_piv(static_cast<std::size_t>(p), false);
    for (int c : pivots) is_piv[static_cast<std::size_t>(c)] = true;
    for (int i = 0; i < rk; ++i) {
        const int pc = pivots[static_cast<std::size_t>(i)];
        for (int c = 0; c < p; ++c) {
            if (is_piv[static_cast<std::size_t>(c)]) continue;
            const Elt coef = ech.at(i, c);
            if (coef == 0) continue;
            for (int row = 0; row < n; ++row)
                ech.set(row, c, f.sub(ech.at(row, c), f.mul(coef, ech.at(row, pc))));
            for (int row = 0; row < p; ++row)
                qmat.set(row, c, f.sub(qmat.at(row, c), f.mul(coef, qmat.at(row, pc))));
        }
    }
    // Permutation: new column order = pivot columns, then the rest ascending.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(p));
    for (int c : pivots) order.push_back(c);
    for (int c = 0; c < p; ++c)
        if (!is_piv[static_cast<std::size_t>(c)]) order.push_back(c);
    Matrix perm(f, p, p);
    for (int j = 0; j < p; ++j) perm.set(order[static_cast<std::size_t>(j)], j, 1);
    return {pmat, qmat * perm};
}

std::optional<std::vector<Elt>> solve_linear(const Matrix& a, const std::vector<Elt>& b) {
    require(static_cast<int>(b.size()) == a.rows(), "solve_linear: rhs size mismatch");
    const Field& f = a.field();
    const int n = a.rows();
    const int m = a.cols();
    std::vector<std::vector<Elt>> aug(static_cast<std::size_t>(n),
                                      std::vector<Elt>(static_cast<std::size_t>(m) + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = b[static_cast<std::size_t>(i)];
    }
    Echelon e = row_reduce(f, std::move(aug));
    std::vector<Elt> x(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == m) return std::nullopt; // pivot in the rhs column
        x[static_cast<std::size_t>(e.pivots[i])] = e.rows[i][static_cast<std::size_t>(m)];
    }
    return x;
}

std::vector<std::vector<Elt>> kernel_basis(const Matrix& a) {
    const Field& f = a.field();
    const int n = a.rows();
    const int m = a.cols();
    std::vector<std::vector<Elt>> rows(static_cast<std::size_t>(n),
                                       std::vector<Elt>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
    Echelon e = row_reduce(f, std::move(rows));
    std::vector<bool> is_piv(static_cast<std::size_t>(m), false);
    for (int c : e.pivots) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Elt>> out;
    for (int free = 0; free < m; ++free) {
        if (is_piv[static_cast<std::size_t>(free)]) continue;
        std::vector<Elt> v(static_cast<std::size_t>(m), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            v[static_cast<std::size_t>(e.pivots[i])] = f.neg(e.rows[i][static_cast<std::size_t>(free)]);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Elt> vector_at(const Field& f, int m, long long index) {
    const long long q = static_cast<long long>(f.order());
    std::vector<Elt> v(static_cast<std::size_t>(m), 0);
    for (int i = m; i-- > 0;) {
        v[static_cast<std::size_t>(i)] = static_cast<Elt>(index % q);
        index /= q;
    }
    return v;
}

VectorSubspace::VectorSubspace(Field f, int ambient_dim) : f_(std::move(f)), ambient_(ambient_dim) {
    require(ambient_dim >= 0, "ambient dimension must be non-negative");
}

VectorSubspace VectorSubspace::span(Field f, int ambient_dim,
                                    const std::vector<std::vector<Elt>>& vectors) {
    VectorSubspace s(f, ambient_dim);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
        require(static_cast<int>(v.size()) == ambient_dim, "span: ambient dimension mismatch");
    Echelon e = row_reduce(f, vectors);
    s.basis_ = std::move(e.rows);
    return s;
}

bool VectorSubspace::contains(const std::vector<Elt>& v) const {
    require(static_cast<int>(v.size()) == ambient_, "membership: ambient dimension mismatch");
    std::vector<Elt> w = v;
    for (const auto& row : basis_) {
        int piv = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                piv = static_cast<int>(j);
                break;
            }
        if (piv < 0) continue;
        const Elt c = w[static_cast<std::size_t>(piv)];
        if (c == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f_.sub(w[j], f_.mul(c, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](Elt x) { return x == 0; });
}

bool VectorSubspace::contains(const VectorSubspace& other) const {
    require(ambient_ == other.ambient_, "inclusion: ambient dimension mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const std::vector<Elt>& v) { return contains(v); });
}

VectorSubspace VectorSubspace::sum(const VectorSubspace& other) const {
    require(ambient_ == other.ambient_, "sum: ambient dimension mismatch");
    std::vector<std::vector<Elt>> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(f_, ambient_, all);
}

bool VectorSubspace::operator==(const VectorSubspace& o) const {
    return f_ == o.f_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

std::string VectorSubspace::to_string() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) os << ", ";
        os << "(";
        for (std::size_t j = 0; j < basis_[i].size(); ++j) {
            if (j) os << ",";
            os << basis_[i][j];
        }
        os << ")";
    }
    os << "} in F^" << ambient_;
    return os.str();
}

long long gaussian_binomial(std::uint64_t q, int m, int d) {
    if (d < 0 || d > m) return 0;
    // q-Pascal recurrence [m d] = [m-1 d-1] + q^d [m-1 d], saturating well
    // below the __int128 range so callers can compare against caps safely.
    constexpr __int128 kSat = static_cast<__int128>(1) << 62;
    std::vector<__int128> row(static_cast<std::size_t>(d) + 1, 0);
    row[0] = 1;
    for (int mm = 1; mm <= m; ++mm) {
        for (int dd = std::min(mm, d); dd >= 1; --dd) {
            __int128 qd = 1;
            for (int e = 0; e < dd; ++e) {
                qd *= static_cast<long long>(q);
                if (qd > kSat) qd = kSat;
            }
            __int128 v = row[static_cast<std::size_t>(dd) - 1] + qd * row[static_cast<std::size_t>(dd)];
            row[static_cast<std::size_t>(dd)] = v > kSat ? kSat : v;
        }
    }
    return static_cast<long long>(row[static_cast<std::size_t>(d)] > kSat ? kSat
                                                                          : row[static_cast<std::size_t>(d)]);
}

bool for_each_subspace(const Field& f, int m, int d,
                       const std::function<bool(const VectorSubspace&)>& visit) {
    if (d < 0 || d > m) return true;
    if (d == 0) return visit(VectorSubspace(f, m));
    const std::uint64_t q = f.order();
    // Pivot pattern: d strictly increasing column indices.
    std::vector<int> piv(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) piv[static_cast<std::size_t>(i)] = i;
    while (true) {
        // Free positions: (row i, col c) with c > piv[i] and c not a pivot.
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(static_cast<std::size_t>(m), false);
        for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
        for (int i = 0; i < d; ++i)
            for (int c = piv[static_cast<std::size_t>(i)] + 1; c < m; ++c)
                if (!is_piv[static_cast<std::size_t>(c)]) free_pos.emplace_back(i, c);
        std::vector<Elt> vals(free_pos.size(), 0);
        while (true) {
            std::vector<std::vector<Elt>> rows(static_cast<std::size_t>(d),
                                               std::vector<Elt>(static_cast<std::size_t>(m), 0));
            for (int i = 0; i < d; ++i)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                rows[static_cast<std::size_t>(free_pos[t].first)][static_cast<std::size_t>(free_pos[t].second)] =
                    vals[t];
            VectorSubspace s = VectorSubspace::span(f, m, rows); // already canonical
            if (!visit(s)) return false;
            // Odometer over the free values, last position fastest.
            std::size_t t = free_pos.size();
            while (t > 0) {
                --t;
                if (vals[t] + 1 < q) {
                    ++vals[t];
                    std::fill(vals.begin() + static_cast<std::ptrdiff_t>(t) + 1, vals.end(), 0);
                    break;
                }
                if (t == 0) {
                    t = free_pos.size() + 1;
                    break;
                }
            }
            if (free_pos.empty() || t == free_pos.size() + 1) break;
        }
        // Next pivot combination, lexicographically.
        int i = d - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == m - d + i) --i;
        if (i < 0) break;
        ++piv[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

std::vector<VectorSubspace> enumerate_subspaces(const Field& f, int m, int d, long long cap) {
    const long long count = gaussian_binomial(f.order(), m, d);
    if (count > cap)
        throw ResourceError("enumerate_subspaces: " + std::to_string(count) +
                            " subspaces exceed the cap of " + std::to_string(cap));
    std::vector<VectorSubspace> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_subspace(f, m, d, [&out](const VectorSubspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::optional<VectorSubspace> hyperplane_envelope(const VectorSubspace& span) {
    const int m = span.ambient_dim();
    if (m == 0 || span.dim() >= m) return std::nullopt;
    std::optional<VectorSubspace> found;
    for_each_subspace(span.field(), m, m - 1, [&](const VectorSubspace& h) {
        if (h.contains(span)) {
            found = h;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace crlab
