#include "polycpx/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace polycpx {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::append_row(const IntVector& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix shape mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (v[j] != 0) out[i] += a(i, j) * v[j];
    return out;
}

IntMatrix scaled(const IntMatrix& a, long k) {
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) *= k;
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << "; ";
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).get_str();
    }
    out << "]";
    return out.str();
}

std::vector<BigInt> SnfResult::diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(diag.rows(), diag.cols()); ++i) d.push_back(diag(i, i));
    return d;
}

namespace {

// Elementary operations applied to A together with the transforms and their inverses.
struct Reducer {
    IntMatrix& a;
    IntMatrix& l;
    IntMatrix& li;
    IntMatrix& r;
    IntMatrix& ri;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < l.cols(); ++k) std::swap(l(i, k), l(j, k));
        for (std::size_t k = 0; k < li.rows(); ++k) std::swap(li(k, i), li(k, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < r.rows(); ++k) std::swap(r(k, i), r(k, j));
        for (std::size_t k = 0; k < ri.cols(); ++k) std::swap(ri(i, k), ri(j, k));
    }
    // row_i += q * row_t
    void add_row(std::size_t i, std::size_t t, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) += q * a(t, k);
        for (std::size_t k = 0; k < l.cols(); ++k) l(i, k) += q * l(t, k);
        for (std::size_t k = 0; k < li.rows(); ++k) li(k, t) -= q * li(k, i);
    }
    // col_j += q * col_t
    void add_col(std::size_t j, std::size_t t, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < a.rows(); ++k) a(k, j) += q * a(k, t);
        for (std::size_t k = 0; k < r.rows(); ++k) r(k, j) += q * r(k, t);
        for (std::size_t k = 0; k < ri.cols(); ++k) ri(t, k) -= q * ri(j, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < l.cols(); ++k) l(i, k) = -l(i, k);
        for (std::size_t k = 0; k < li.rows(); ++k) li(k, i) = -li(k, i);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SnfResult res;
    res.diag = m;
    res.left = IntMatrix::identity(rows);
    res.left_inverse = IntMatrix::identity(rows);
    res.right = IntMatrix::identity(cols);
    res.right_inverse = IntMatrix::identity(cols);
    Reducer red{res.diag, res.left, res.left_inverse, res.right, res.right_inverse};
    IntMatrix& a = res.diag;

    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // pivot: smallest nonzero absolute value, ties broken by (row, col)
        bool found = false;
        std::size_t pi = 0, pj = 0;
        BigInt best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                BigInt v = abs(a(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        red.swap_rows(t, pi);
        red.swap_cols(t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                red.add_row(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                red.add_col(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // move the smallest remainder in row/column t to the pivot
                std::size_t bi = t, bj = t;
                BigInt bv = abs(a(t, t));
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a(i, t) != 0 && abs(a(i, t)) < bv) {
                        bv = abs(a(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(t, j) != 0 && abs(a(t, j)) < bv) {
                        bv = abs(a(t, j));
                        bi = t;
                        bj = j;
                    }
                red.swap_rows(t, bi);
                red.swap_cols(t, bj);
                continue;
            }
            // divisibility of the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        red.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) red.negate_row(t);
    }
    res.rank = t;
    return res;
}

IntegerSolver::IntegerSolver(const IntMatrix& a) : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)) {}

std::optional<IntVector> IntegerSolver::solve(const IntVector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    IntVector lb = snf_.left * b;
    IntVector y(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i < snf_.rank) {
            const BigInt& d = snf_.diag(i, i);
            if (!mpz_divisible_p(lb[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
            y[i] = lb[i] / d;
        } else if (lb[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_.right * y;
}

IntMatrix IntegerSolver::kernel_basis() const {
    IntMatrix k(cols_, cols_ - snf_.rank);
    for (std::size_t j = snf_.rank; j < cols_; ++j)
        for (std::size_t i = 0; i < cols_; ++i) k(i, j - snf_.rank) = snf_.right(i, j);
    return k;
}

IntMatrix lattice_basis(const IntMatrix& g) {
    SnfResult s = smith_normal_form(g);
    // g * R = L^{-1} * D, so the nonzero columns of L^{-1} D span the same lattice
    IntMatrix basis(g.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < g.rows(); ++i) basis(i, j) = s.left_inverse(i, j) * s.diag(j, j);
    return basis;
}

}  // namespace polycpx
