#include "weiltate/polycore.hpp"

#include "weiltate/error.hpp"

namespace weiltate {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        fail(ErrorKind::InvalidArgument, "matrix entry count does not match its shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) fail(ErrorKind::InvalidArgument, "ragged matrix literal");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix shapes do not conform");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& lhs = a(i, k);
            if (lhs == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                mpz_addmul(out(i, j).get_mpz_t(), lhs.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return out;
}

IntMatrix IntMatrix::pow(const Integer& e) const {
    if (!is_square()) fail(ErrorKind::NotSquare, "matrix power of a non-square matrix");
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative matrix exponent");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
        if (i + 1 < bits) base = base * base;
    }
    return result;
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) fail(ErrorKind::NotSquare, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

IntPoly charpoly(const IntMatrix& m) {
    if (!m.is_square()) fail(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    // Berkowitz: p_k = T_k * p_{k-1}, with T_k the lower triangular Toeplitz
    // matrix whose first column is (1, -a_kk, -R C, -R A C, ..., -R A^(k-2) C)
    // for the leading (k-1) block A, row R and column C of the k-th border.
    // Coefficients are held highest degree first.
    std::vector<Integer> p{Integer(1)};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Integer> toeplitz(k + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -m(k, k);
        std::vector<Integer> col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = m(i, k);
        for (std::size_t s = 2; s <= k + 1; ++s) {
            Integer dot = 0;
            for (std::size_t i = 0; i < k; ++i) mpz_addmul(dot.get_mpz_t(), m(k, i).get_mpz_t(), col[i].get_mpz_t());
            toeplitz[s] = -dot;
            if (s == k + 1) break;
            std::vector<Integer> next(k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    mpz_addmul(next[i].get_mpz_t(), m(i, j).get_mpz_t(), col[j].get_mpz_t());
            col = std::move(next);
        }
        std::vector<Integer> q(k + 2);
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j)
                mpz_addmul(q[i].get_mpz_t(), toeplitz[i - j].get_mpz_t(), p[j].get_mpz_t());
        p = std::move(q);
    }
    return IntPoly(std::vector<Integer>(p.rbegin(), p.rend()));
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) return out;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

IntMatrix compound_matrix(const IntMatrix& m, std::size_t r) {
    if (!m.is_square()) fail(ErrorKind::NotSquare, "compound matrix of a non-square matrix");
    const std::size_t s = m.rows();
    if (r < 1 || r > s)
        fail(ErrorKind::OutOfRange, "compound order " + std::to_string(r) + " outside 1.." + std::to_string(s));
    const auto subsets = subsets_lex(s, r);
    const std::size_t size = subsets.size();
    IntMatrix out(size, size);
    IntMatrix minor(r, r);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) {
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) minor(i, j) = m(subsets[a][i], subsets[b][j]);
            out(a, b) = determinant(minor);
        }
    return out;
}

IntMatrix companion(const IntPoly& f) {
    if (f.degree() < 1) fail(ErrorKind::InvalidArgument, "companion matrix needs degree >= 1");
    if (!f.is_monic()) fail(ErrorKind::NotMonic, "companion matrix needs a monic polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    IntMatrix c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeffs()[i];
    return c;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace weiltate
