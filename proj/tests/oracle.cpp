#include "oracle.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

long long labs_(long long x) { return x < 0 ? -x : x; }

std::size_t ncols(const Mat& m, std::size_t fallback = 0) { return m.empty() ? fallback : m[0].size(); }

// Column echelon form by integer column operations. Each nonzero column gets a
// pivot row, pivot rows strictly increase. Applies the same operations to u
// when given. Returns the number of nonzero columns (they come first).
std::size_t column_echelon(Mat& a, std::size_t cols, Mat* u) {
    const std::size_t rows = a.size();
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& r : a) std::swap(r[x], r[y]);
        if (u)
            for (auto& r : *u) std::swap(r[x], r[y]);
    };
    auto sub_col = [&](std::size_t dst, std::size_t src, long long q) {
        for (auto& r : a) r[dst] -= q * r[src];
        if (u)
            for (auto& r : *u) r[dst] -= q * r[src];
    };
    std::size_t piv = 0;
    for (std::size_t r = 0; r < rows && piv < cols; ++r) {
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = piv; j < cols; ++j)
                if (a[r][j] != 0 && (best == cols || labs_(a[r][j]) < labs_(a[r][best]))) best = j;
            if (best == cols) break;
            swap_cols(piv, best);
            bool clean = true;
            for (std::size_t j = piv + 1; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                sub_col(j, piv, a[r][j] / a[r][piv]);
                if (a[r][j] != 0) clean = false;
            }
            if (clean) {
                ++piv;
                break;
            }
        }
    }
    return piv;
}

}  // namespace

std::string Abelian::str() const {
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (long long t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
    return s.empty() ? "0" : s;
}

Mat from_library(const polycpx::IntMatrix& m) {
    Mat out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_slong_p()) throw std::overflow_error("oracle: entry too large");
            out[i][j] = m(i, j).get_si();
        }
    return out;
}

std::vector<long long> invariant_factors(Mat m) {
    const std::size_t rows = m.size(), cols = ncols(m);
    std::vector<long long> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (bi == rows || labs_(m[i][j]) < labs_(m[bi][bj]))) bi = i, bj = j;
            if (bi == rows) return out;
            std::swap(m[t], m[bi]);
            for (auto& r : m) std::swap(r[t], r[bj]);
            const long long p = m[t][t];
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                long long q = m[i][t] / p;
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                long long q = m[t][j] / p;
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % p != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
        }
        out.push_back(labs_(m[t][t]));
    }
    return out;
}

std::size_t rank(const Mat& m) { return invariant_factors(m).size(); }

Abelian presented(const Mat& relations, std::size_t generators) {
    Abelian a;
    auto f = invariant_factors(relations);
    a.free_rank = generators - f.size();
    for (long long x : f)
        if (x > 1) a.torsion.push_back(x);
    return a;
}

Abelian of(const polycpx::FpAbelianGroup& g) { return presented(from_library(g.relations()), g.num_generators()); }

Mat kernel_columns(const Mat& a, std::size_t cols) {
    Mat work = a;
    Mat u(cols, std::vector<long long>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
    const std::size_t nz = column_echelon(work, cols, &u);
    Mat k(cols, std::vector<long long>());
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = nz; j < cols; ++j) k[i].push_back(u[i][j]);
    return k;
}

Abelian cokernel(const Mat& a, const Mat& target_relations, std::size_t target_gens) {
    Mat rel = target_relations;
    for (std::size_t j = 0; j < ncols(a); ++j) {
        std::vector<long long> r(target_gens);
        for (std::size_t i = 0; i < target_gens; ++i) r[i] = a[i][j];
        rel.push_back(r);
    }
    return presented(rel, target_gens);
}

Abelian homology(const std::vector<Mat>& rel, const std::vector<std::size_t>& gens, const std::vector<Mat>& d,
                 std::size_t m) {
    const std::size_t g = gens[m];
    // cycles: x with d_m x in the relation lattice of level m-1
    Mat z;
    std::size_t zc = 0;
    if (m == 0) {
        z.assign(g, std::vector<long long>(g, 0));
        for (std::size_t i = 0; i < g; ++i) z[i][i] = 1;
        zc = g;
    } else {
        const Mat& dm = d[m - 1];
        const Mat& r = rel[m - 1];
        const std::size_t below = gens[m - 1];
        const std::size_t width = g + r.size();
        Mat a(below, std::vector<long long>(width, 0));
        for (std::size_t i = 0; i < below; ++i) {
            for (std::size_t j = 0; j < g; ++j) a[i][j] = dm[i][j];
            for (std::size_t k = 0; k < r.size(); ++k) a[i][g + k] = -r[k][i];
        }
        Mat k = kernel_columns(a, width);
        const std::size_t kc = ncols(k, 0);
        z.assign(g, std::vector<long long>(kc, 0));
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < kc; ++j) z[i][j] = k[i][j];
        zc = kc;
    }
    const std::size_t basis = column_echelon(z, zc, nullptr);

    // boundaries plus relations of level m, as columns
    std::vector<std::vector<long long>> bs;
    if (m < d.size()) {
        const Mat& up = d[m];
        for (std::size_t j = 0; j < gens[m + 1]; ++j) {
            std::vector<long long> b(g);
            for (std::size_t i = 0; i < g; ++i) b[i] = up[i][j];
            bs.push_back(b);
        }
    }
    for (const auto& r : rel[m]) bs.push_back(r);

    Mat coords;
    for (auto b : bs) {
        std::vector<long long> c(basis, 0);
        std::size_t row = 0;
        for (std::size_t j = 0; j < basis; ++j) {
            while (z[row][j] == 0) ++row;
            if (b[row] % z[row][j] != 0) throw std::logic_error("oracle: boundary outside the cycle lattice");
            c[j] = b[row] / z[row][j];
            for (std::size_t i = 0; i < g; ++i) b[i] -= c[j] * z[i][j];
        }
        for (long long x : b)
            if (x != 0) throw std::logic_error("oracle: boundary outside the cycle lattice");
        coords.push_back(c);
    }
    return presented(coords, basis);
}

Abelian homology(const polycpx::ChainComplexZ& cc, std::size_t m) {
    std::vector<Mat> rel, d;
    std::vector<std::size_t> gens;
    for (std::size_t k = 0; k <= cc.top(); ++k) {
        rel.push_back(from_library(cc.level(k).relations()));
        gens.push_back(cc.level(k).num_generators());
        if (k >= 1) d.push_back(from_library(cc.differential(k)));
    }
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k].empty()) d[k].assign(gens[k], std::vector<long long>(gens[k + 1], 0));
    return homology(rel, gens, d, m);
}

std::size_t prime_power_divisors(long long n) {
    std::size_t count = 0;
    for (long long q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        long long p = 2;
        while (q % p != 0) ++p;
        long long x = q;
        while (x % p == 0) x /= p;
        if (x == 1) ++count;
    }
    return count;
}

}  // namespace oracle
