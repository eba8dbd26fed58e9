#include "polycpx/group.hpp"

#include <mutex>

#include "polycpx/error.hpp"

namespace polycpx {

struct FpAbelianGroup::Cache {
    std::once_flag snf_once;
    SnfResult snf;
    std::once_flag solver_once;
    std::unique_ptr<IntegerSolver> solver;
};

FpAbelianGroup::FpAbelianGroup(std::vector<std::string> generators, IntMatrix relations)
    : generators_(std::move(generators)), relations_(std::move(relations)), cache_(std::make_shared<Cache>()) {
    if (relations_.rows() == 0 && relations_.cols() != generators_.size()) relations_ = IntMatrix(0, generators_.size());
    if (relations_.cols() != generators_.size())
        throw Error(ErrorCode::InvalidMorphism, "relation matrix width does not match generator count");
}

FpAbelianGroup FpAbelianGroup::free(std::size_t rank, const std::string& prefix) {
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= rank; ++i) gens.push_back(prefix + std::to_string(i));
    return FpAbelianGroup(std::move(gens), IntMatrix(0, rank));
}

const FpAbelianGroup::Cache& FpAbelianGroup::cache() const {
    std::call_once(cache_->snf_once, [this] { cache_->snf = smith_normal_form(relations_); });
    return *cache_;
}

std::size_t FpAbelianGroup::free_rank() const { return generators_.size() - cache().snf.rank; }

std::vector<BigInt> FpAbelianGroup::torsion() const {
    const auto& s = cache().snf;
    std::vector<BigInt> t;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.diag(i, i) > 1) t.push_back(s.diag(i, i));
    return t;
}

std::string FpAbelianGroup::to_string() const {
    std::vector<std::string> parts;
    std::size_t r = free_rank();
    if (r == 1) parts.push_back("Z");
    else if (r > 1) parts.push_back("Z^" + std::to_string(r));
    for (const auto& d : torsion()) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
    return s;
}

std::vector<BigInt> FpAbelianGroup::class_moduli() const {
    const auto& s = cache().snf;
    std::vector<BigInt> mods;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i < s.rank) {
            if (s.diag(i, i) != 1) mods.push_back(s.diag(i, i));
        } else {
            mods.push_back(0);
        }
    }
    return mods;
}

std::vector<std::vector<BigInt>> FpAbelianGroup::generator_classes() const {
    const auto& s = cache().snf;
    std::vector<std::vector<BigInt>> out;
    for (std::size_t j = 0; j < generators_.size(); ++j) {
        std::vector<BigInt> coords;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            BigInt v = s.right(j, i);
            if (i < s.rank) {
                const BigInt& d = s.diag(i, i);
                if (d == 1) continue;
                BigInt r;
                mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
                v = r;
            }
            coords.push_back(v);
        }
        out.push_back(std::move(coords));
    }
    return out;
}

bool FpAbelianGroup::is_relation(const IntVector& v) const {
    if (v.size() != generators_.size()) throw Error(ErrorCode::InvalidMorphism, "vector length mismatch");
    if (relations_.rows() == 0) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    std::call_once(cache_->solver_once,
                   [this] { cache_->solver = std::make_unique<IntegerSolver>(relations_.transposed()); });
    return cache_->solver->solve(v).has_value();
}

bool groups_isomorphic(const FpAbelianGroup& g, const FpAbelianGroup& h) {
    return g.free_rank() == h.free_rank() && g.torsion() == h.torsion();
}

GroupHom::GroupHom(FpAbelianGroup source, FpAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 && matrix_.cols() == 0) matrix_ = IntMatrix(target_.num_generators(), source_.num_generators());
    if (matrix_.rows() != target_.num_generators() || matrix_.cols() != source_.num_generators())
        throw Error(ErrorCode::InvalidMorphism, "homomorphism matrix has the wrong shape");
    for (std::size_t i = 0; i < source_.relations().rows(); ++i)
        if (!target_.is_relation(matrix_ * source_.relations().row(i)))
            throw Error(ErrorCode::InvalidMorphism, "relation " + std::to_string(i) + " is not preserved");
}

FpAbelianGroup cokernel(const GroupHom& f) {
    IntMatrix rel = f.target().relations();
    for (std::size_t j = 0; j < f.matrix().cols(); ++j) rel.append_row(f.matrix().column(j));
    return FpAbelianGroup(f.target().generators(), rel);
}

bool is_surjective(const GroupHom& f) {
    FpAbelianGroup c = cokernel(f);
    return c.free_rank() == 0 && c.torsion().empty();
}

bool is_isomorphism(const GroupHom& f) {
    // a surjection between isomorphic finitely generated abelian groups is injective
    return is_surjective(f) && groups_isomorphic(f.source(), f.target());
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
    return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

bool is_zero_map(const GroupHom& f) {
    for (std::size_t j = 0; j < f.matrix().cols(); ++j)
        if (!f.target().is_relation(f.matrix().column(j))) return false;
    return true;
}

ChainComplexZ::ChainComplexZ(std::vector<FpAbelianGroup> levels, std::vector<IntMatrix> differentials)
    : levels_(std::move(levels)), diffs_(std::move(differentials)) {
    if (levels_.empty() || diffs_.size() + 1 != levels_.size())
        throw Error(ErrorCode::InvalidMorphism, "chain complex needs N differentials for N+1 levels");
    for (std::size_t m = 1; m < levels_.size(); ++m) {
        IntMatrix& d = diffs_[m - 1];
        if (d.rows() == 0 && d.cols() == 0) d = IntMatrix(levels_[m - 1].num_generators(), levels_[m].num_generators());
        GroupHom check(levels_[m], levels_[m - 1], d);
        (void)check;
    }
    for (std::size_t m = 2; m < levels_.size(); ++m) {
        IntMatrix dd = diffs_[m - 2] * diffs_[m - 1];
        for (std::size_t j = 0; j < dd.cols(); ++j)
            if (!levels_[m - 2].is_relation(dd.column(j)))
                throw Error(ErrorCode::InvalidMorphism, "d_" + std::to_string(m - 1) + " d_" + std::to_string(m) +
                                                            " is not zero");
    }
}

FpAbelianGroup homology(const ChainComplexZ& x, std::size_t m) {
    if (m >= x.top()) throw Error(ErrorCode::IndexOutOfRange, "homology degree " + std::to_string(m));
    const FpAbelianGroup& cm = x.level(m);
    const std::size_t g = cm.num_generators();
    if (g == 0) return FpAbelianGroup();

    // cycles: x with d_m x in the relation lattice of C_{m-1}
    IntMatrix cycles_gen;
    if (m == 0) {
        cycles_gen = IntMatrix::identity(g);
    } else {
        const IntMatrix& d = x.differential(m);
        const IntMatrix& rel = x.level(m - 1).relations();
        IntMatrix a(d.rows(), g + rel.rows());
        for (std::size_t i = 0; i < d.rows(); ++i) {
            for (std::size_t j = 0; j < g; ++j) a(i, j) = d(i, j);
            for (std::size_t k = 0; k < rel.rows(); ++k) a(i, g + k) = -rel(k, i);
        }
        IntMatrix ker = IntegerSolver(a).kernel_basis();
        cycles_gen = IntMatrix(g, ker.cols());
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < ker.cols(); ++j) cycles_gen(i, j) = ker(i, j);
    }
    IntMatrix basis = lattice_basis(cycles_gen);
    const std::size_t k = basis.cols();
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= k; ++i) gens.push_back("z" + std::to_string(i));
    if (k == 0) return FpAbelianGroup();

    IntegerSolver coords(basis);
    IntMatrix rel(0, k);
    auto add = [&](const IntVector& s) {
        auto c = coords.solve(s);
        if (!c) throw std::logic_error("boundary is not a cycle");
        rel.append_row(*c);
    };
    for (std::size_t i = 0; i < cm.relations().rows(); ++i) add(cm.relations().row(i));
    const IntMatrix& up = x.differential(m + 1);
    for (std::size_t j = 0; j < up.cols(); ++j) add(up.column(j));
    return FpAbelianGroup(std::move(gens), std::move(rel));
}

}  // namespace polycpx
