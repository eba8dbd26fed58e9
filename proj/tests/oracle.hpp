#pragma once

// Independent reference computations for the tests. Plain long long arithmetic,
// no shared code with the library's linear algebra.

#include <string>
#include <vector>

#include "polycpx/group.hpp"

namespace oracle {

using Mat = std::vector<std::vector<long long>>;  // row major

struct Abelian {
    std::size_t free_rank = 0;
    std::vector<long long> torsion;  // factors > 1, ascending by divisibility
    std::string str() const;
    bool operator==(const Abelian&) const = default;
};

Mat from_library(const polycpx::IntMatrix& m);
// nonzero invariant factors of m
std::vector<long long> invariant_factors(Mat m);
std::size_t rank(const Mat& m);
// Z^cols / rowspan(relations)
Abelian presented(const Mat& relations, std::size_t generators);
Abelian of(const polycpx::FpAbelianGroup& g);
// columns spanning {x : a x = 0}
Mat kernel_columns(const Mat& a, std::size_t cols);
// target / (image + target relations); a is target gens x source gens
Abelian cokernel(const Mat& a, const Mat& target_relations, std::size_t target_gens);

// H_m of levels Z^{g_m}/R_m with d_m : level m -> level m-1 (d[m-1] is d_m)
Abelian homology(const std::vector<Mat>& rel, const std::vector<std::size_t>& gens, const std::vector<Mat>& d,
                 std::size_t m);
Abelian homology(const polycpx::ChainComplexZ& cc, std::size_t m);

// number of divisors of n that are prime powers p^k, k >= 1
std::size_t prime_power_divisors(long long n);

}  // namespace oracle
