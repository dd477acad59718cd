#include "koszul/matrix.hpp"

#include <sstream>

#include "koszul/simd_kernels.hpp"

namespace koszul {

Matrix::Matrix(const Field& f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw UsageError("negative matrix dimensions");
    if (field_.is_prime_field())
        fp_.assign(static_cast<size_t>(rows) * cols, 0u);
    else
        rat_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

Matrix Matrix::from_ints(const Field& f, int rows, int cols, const std::vector<long long>& v) {
    if (static_cast<size_t>(rows) * cols != v.size()) throw UsageError("from_ints: size mismatch");
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set_int(i, j, v[static_cast<size_t>(i) * cols + j]);
    return m;
}

Scalar Matrix::get(int i, int j) const {
    Scalar s;
    size_t k = static_cast<size_t>(i) * cols_ + j;
    if (field_.is_prime_field())
        s.r = fp_[k];
    else
        s.q = rat_[k];
    return s;
}

void Matrix::set(int i, int j, const Scalar& s) {
    size_t k = static_cast<size_t>(i) * cols_ + j;
    if (field_.is_prime_field())
        fp_[k] = s.r;
    else
        rat_[k] = s.q;
}

bool Matrix::is_zero() const {
    if (field_.is_prime_field()) {
        for (uint32_t v : fp_)
            if (v) return false;
    } else {
        for (const Rational& v : rat_)
            if (v != 0) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Scalar s = get(i, j);
            if (i == j ? !field_.is_one(s) : !field_.is_zero(s)) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return field_.is_prime_field() ? fp_ == o.fp_ : rat_ == o.rat_;
}

void Matrix::check_same_field(const Matrix& o) const {
    if (field_ != o.field_) throw UsageError("matrix field mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in +");
    Matrix r(field_, rows_, cols_);
    if (field_.is_prime_field()) {
        uint64_t p = field_.p();
        for (size_t k = 0; k < fp_.size(); ++k) {
            uint64_t t = static_cast<uint64_t>(fp_[k]) + o.fp_[k];
            r.fp_[k] = static_cast<uint32_t>(t >= p ? t - p : t);
        }
    } else {
        for (size_t k = 0; k < rat_.size(); ++k) r.rat_[k] = rat_[k] + o.rat_[k];
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.negated(); }

Matrix Matrix::negated() const {
    Matrix r(field_, rows_, cols_);
    if (field_.is_prime_field()) {
        uint32_t p = field_.p();
        for (size_t k = 0; k < fp_.size(); ++k) r.fp_[k] = fp_[k] ? p - fp_[k] : 0;
    } else {
        for (size_t k = 0; k < rat_.size(); ++k) r.rat_[k] = -rat_[k];
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    if (field_.is_prime_field()) {
        fp_kernels().scale(r.fp_.data(), c.r, r.fp_.size(), field_.p());
    } else {
        for (auto& v : r.rat_) v *= c.q;
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(o);
    if (cols_ != o.rows_) throw UsageError("matrix shape mismatch in *");
    Matrix r(field_, rows_, o.cols_);
    if (field_.is_prime_field()) {
        // accumulate row i of the result as sum_k a[i][k] * b[k][.]
        const auto& kern = fp_kernels();
        for (int i = 0; i < rows_; ++i) {
            uint32_t* out = r.fp_.data() + static_cast<size_t>(i) * o.cols_;
            for (int k = 0; k < cols_; ++k) {
                uint32_t a = fp_[static_cast<size_t>(i) * cols_ + k];
                if (a) kern.axpy(out, o.fp_.data() + static_cast<size_t>(k) * o.cols_, a, o.cols_, field_.p());
            }
        }
    } else {
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = rat_[static_cast<size_t>(i) * cols_ + k];
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.rat_[static_cast<size_t>(i) * o.cols_ + j] += a * o.rat_[static_cast<size_t>(k) * o.cols_ + j];
            }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, get(i, j));
    return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
    check_same_field(o);
    if (rows_ != o.rows_) throw UsageError("hcat: row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.set(i, j, get(i, j));
        for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.get(i, j));
    }
    return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
    check_same_field(o);
    if (cols_ != o.cols_) throw UsageError("vcat: column mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, get(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.get(i, j));
    return r;
}

Matrix Matrix::block(int i0, int j0, int nrows, int ncols) const {
    if (i0 < 0 || j0 < 0 || i0 + nrows > rows_ || j0 + ncols > cols_)
        throw UsageError("block out of range");
    Matrix r(field_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.set(i, j, get(i0 + i, j0 + j));
    return r;
}

namespace {

// prime-field elimination on packed rows via the kernel set
struct FpElim {
    std::vector<uint32_t>& a;
    int rows, cols;
    uint32_t p;
    const FpKernels& kern = fp_kernels();

    uint32_t* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < cols; ++k) std::swap(row(i)[k], row(j)[k]);
    }
    void scale_row(int i, uint32_t c) { kern.scale(row(i), c, cols, p); }
    void addmul_row(int dst, int src, uint32_t c) {
        if (c) kern.axpy(row(dst), row(src), c, cols, p);
    }
};

}  // namespace

Matrix::Rref Matrix::rref(bool want_transform) const {
    Rref out;
    out.reduced = *this;
    out.transform = want_transform ? identity(field_, rows_) : Matrix(field_, 0, 0);
    int r = 0;
    if (field_.is_prime_field()) {
        Field f = field_;
        uint32_t p = f.p();
        FpElim e{out.reduced.fp_, rows_, cols_, p};
        FpElim t{out.transform.fp_, rows_, rows_, p};
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (e.row(i)[c]) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            e.swap_rows(piv, r);
            if (want_transform) t.swap_rows(piv, r);
            uint32_t inv = f.inv_mod(e.row(r)[c]);
            if (inv != 1) {
                e.scale_row(r, inv);
                if (want_transform) t.scale_row(r, inv);
            }
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                uint32_t v = e.row(i)[c];
                if (!v) continue;
                uint32_t c2 = p - v;
                e.addmul_row(i, r, c2);
                if (want_transform) t.addmul_row(i, r, c2);
            }
            out.pivots.push_back(c);
            ++r;
        }
    } else {
        Matrix& m = out.reduced;
        Matrix& t = out.transform;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (m.rat_[static_cast<size_t>(i) * cols_ + c] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            for (int k = 0; k < cols_; ++k)
                std::swap(m.rat_[static_cast<size_t>(piv) * cols_ + k], m.rat_[static_cast<size_t>(r) * cols_ + k]);
            if (want_transform)
                for (int k = 0; k < rows_; ++k)
                    std::swap(t.rat_[static_cast<size_t>(piv) * rows_ + k], t.rat_[static_cast<size_t>(r) * rows_ + k]);
            Rational inv = 1 / m.rat_[static_cast<size_t>(r) * cols_ + c];
            if (inv != 1) {
                for (int k = 0; k < cols_; ++k) m.rat_[static_cast<size_t>(r) * cols_ + k] *= inv;
                if (want_transform)
                    for (int k = 0; k < rows_; ++k) t.rat_[static_cast<size_t>(r) * rows_ + k] *= inv;
            }
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                Rational v = m.rat_[static_cast<size_t>(i) * cols_ + c];
                if (v == 0) continue;
                for (int k = 0; k < cols_; ++k)
                    m.rat_[static_cast<size_t>(i) * cols_ + k] -= v * m.rat_[static_cast<size_t>(r) * cols_ + k];
                if (want_transform)
                    for (int k = 0; k < rows_; ++k)
                        t.rat_[static_cast<size_t>(i) * rows_ + k] -= v * t.rat_[static_cast<size_t>(r) * rows_ + k];
            }
            out.pivots.push_back(c);
            ++r;
        }
    }
    out.rank = r;
    return out;
}

Matrix Matrix::kernel_basis() const {
    Rref rr = rref();
    int nullity = cols_ - rr.rank;
    Matrix k(field_, cols_, nullity);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    int out = 0;
    for (int fcol = 0; fcol < cols_; ++fcol) {
        if (is_pivot[fcol]) continue;
        k.set(fcol, out, field_.one());
        for (size_t prow = 0; prow < rr.pivots.size(); ++prow)
            k.set(rr.pivots[prow], out, field_.neg(rr.reduced.get(static_cast<int>(prow), fcol)));
        ++out;
    }
    return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    check_same_field(rhs);
    if (rhs.rows() != rows_) throw UsageError("solve: rhs row count mismatch");
    Rref rr = hcat(rhs).rref();
    Matrix x(field_, cols_, rhs.cols());
    // any pivot in the rhs block exposes an inconsistent column
    std::vector<int> pivot_of_col(cols_, -1);
    for (size_t prow = 0; prow < rr.pivots.size(); ++prow) {
        int c = rr.pivots[prow];
        if (c >= cols_) return std::nullopt;
        pivot_of_col[c] = static_cast<int>(prow);
    }
    for (int j = 0; j < rhs.cols(); ++j)
        for (int c = 0; c < cols_; ++c)
            if (pivot_of_col[c] >= 0) x.set(c, j, rr.reduced.get(pivot_of_col[c], cols_ + j));
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw UsageError("inverse: matrix not square");
    Rref rr = rref(true);
    if (rr.rank != rows_) throw ComputeError("inverse: singular matrix");
    return rr.transform;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << field_.to_string(get(i, j));
        os << "]";
    }
    return os.str();
}

std::vector<int> column_space_pivot_rows(const Matrix& m) {
    Matrix::Rref rr = m.transpose().rref();
    return rr.pivots;
}

std::vector<int> extend_basis_columns(const Matrix& base, const Matrix& candidates) {
    if (base.rows() != candidates.rows()) throw UsageError("extend_basis_columns: row mismatch");
    Matrix::Rref rr = base.hcat(candidates).rref();
    std::vector<int> chosen;
    for (int c : rr.pivots)
        if (c >= base.cols()) chosen.push_back(c - base.cols());
    return chosen;
}

}  // namespace koszul
