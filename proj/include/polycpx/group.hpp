#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polycpx/linalg.hpp"

namespace polycpx {

// Z^generators / (row span of relations)
class FpAbelianGroup {
public:
    FpAbelianGroup() : FpAbelianGroup(std::vector<std::string>{}, IntMatrix(0, 0)) {}
    FpAbelianGroup(std::vector<std::string> generators, IntMatrix relations);
    static FpAbelianGroup free(std::size_t rank, const std::string& prefix = "e");

    const std::vector<std::string>& generators() const { return generators_; }
    std::size_t num_generators() const { return generators_.size(); }
    const IntMatrix& relations() const { return relations_; }

    std::size_t free_rank() const;
    // invariant factors > 1, in divisibility order
    std::vector<BigInt> torsion() const;
    std::string to_string() const;
    // coordinates of each generator in the invariant decomposition
    std::vector<std::vector<BigInt>> generator_classes() const;
    std::vector<BigInt> class_moduli() const;  // 0 for a free summand
    // the relation lattice contains v
    bool is_relation(const IntVector& v) const;

private:
    struct Cache;
    const Cache& cache() const;

    std::vector<std::string> generators_;
    IntMatrix relations_;
    std::shared_ptr<Cache> cache_;
};

bool groups_isomorphic(const FpAbelianGroup& g, const FpAbelianGroup& h);

class GroupHom {
public:
    // matrix is target generators x source generators; throws InvalidMorphism
    // when a source relation is not sent into the target relation lattice
    GroupHom(FpAbelianGroup source, FpAbelianGroup target, IntMatrix matrix);

    const FpAbelianGroup& source() const { return source_; }
    const FpAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

private:
    FpAbelianGroup source_;
    FpAbelianGroup target_;
    IntMatrix matrix_;
};

FpAbelianGroup cokernel(const GroupHom& f);
bool is_surjective(const GroupHom& f);
bool is_isomorphism(const GroupHom& f);
GroupHom compose(const GroupHom& f, const GroupHom& g);  // g after f
// the map is zero on the quotient groups
bool is_zero_map(const GroupHom& f);

class ChainComplexZ {
public:
    // differentials[m-1] is d_m : C_m -> C_{m-1}, for m = 1..N
    ChainComplexZ(std::vector<FpAbelianGroup> levels, std::vector<IntMatrix> differentials);

    std::size_t top() const { return levels_.size() - 1; }
    const FpAbelianGroup& level(std::size_t m) const { return levels_.at(m); }
    const IntMatrix& differential(std::size_t m) const { return diffs_.at(m - 1); }

private:
    std::vector<FpAbelianGroup> levels_;
    std::vector<IntMatrix> diffs_;
};

// H_m for 0 <= m <= N-1
FpAbelianGroup homology(const ChainComplexZ& x, std::size_t m);

}  // namespace polycpx
