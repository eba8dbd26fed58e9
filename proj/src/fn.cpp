#include "polycpx/fn.hpp"

#include <algorithm>

#include "polycpx/error.hpp"
#include "polycpx/sc.hpp"

namespace polycpx {

std::string chain_name(const PolytopeComplex& c, const Chain& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "~" : "") + family_name(c, x[i]);
    return s;
}

PolytopeId p1(const Chain& x) {
    if (x.empty() || x[0].size() != 1) throw Error(ErrorCode::InvalidMorphism, "chain head is not a singleton");
    return x[0][0];
}

Chain constant_chain(PolytopeId a, int n) { return Chain(static_cast<std::size_t>(n), Family{a}); }

bool is_fn_object(const PolytopeComplex& c, const Chain& x) {
    if (x.empty() || x[0].size() != 1) return false;
    for (const auto& level : x)
        if (level.empty() || !std::is_sorted(level.begin(), level.end()) || !pairwise_disjoint(c, level))
            return false;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        for (PolytopeId a : x[i]) {
            std::vector<PolytopeId> under;
            for (PolytopeId b : x[i + 1])
                if (c.leq(b, a)) under.push_back(b);
            if (is_cover(c, under, a) != Tri::True) return false;
        }
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        for (PolytopeId b : x[i + 1]) {
            bool parent = false;
            for (PolytopeId a : x[i]) parent = parent || c.leq(b, a);
            if (!parent) return false;
        }
    return true;
}

Chain transport(const PolytopeComplex& c, HorizId h, const Chain& x) {
    const auto& G = c.groupoid();
    Chain y;
    for (const auto& level : x) {
        Family f;
        for (PolytopeId a : level) f.push_back(G.apply(h, a));
        std::sort(f.begin(), f.end());
        y.push_back(std::move(f));
    }
    return y;
}

Chain restrict_chain(const PolytopeComplex& c, const Chain& x, PolytopeId p) {
    Chain y;
    for (const auto& level : x) {
        Family f;
        for (PolytopeId a : level) {
            auto m = c.meet(a, p);
            if (m && *m != kInitial) f.push_back(*m);
        }
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        y.push_back(std::move(f));
    }
    return y;
}

FnComplex::FnComplex(PolytopeComplex base, int n, std::size_t size_bound)
    : base_(std::move(base)), n_(n), bound_(size_bound) {
    if (n < 0) throw Error(ErrorCode::ArgumentOutOfRange, "f_n needs n >= 0");
    ComplexBuilder b("f" + std::to_string(n) + "(" + base_.label() + ")", base_.name(kInitial));
    chains_.push_back({});
    index_[{}] = kInitial;

    std::vector<Chain> all;
    if (n > 0) {
        std::map<PolytopeId, std::vector<Family>> covers;
        for (PolytopeId x : base_.noninitial()) covers[x] = disjoint_families_under(base_, x, true);
        Chain cur;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(cur.size()) == n) {
                all.push_back(cur);
                return;
            }
            const Family last = cur.back();
            // one cover per member of the last level
            std::vector<std::size_t> pick(last.size(), 0);
            while (true) {
                Family next;
                for (std::size_t k = 0; k < last.size(); ++k) {
                    const auto& f = covers[last[k]][pick[k]];
                    next.insert(next.end(), f.begin(), f.end());
                }
                std::sort(next.begin(), next.end());
                if (next.size() <= bound_) {
                    cur.push_back(next);
                    self(self);
                    cur.pop_back();
                }
                std::size_t k = 0;
                while (k < last.size() && ++pick[k] == covers[last[k]].size()) pick[k++] = 0;
                if (k == last.size()) break;
            }
        };
        for (PolytopeId x : base_.noninitial()) {
            cur = {Family{x}};
            rec(rec);
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const Chain& a, const Chain& b) {
        std::size_t sa = 0, sb = 0;
        for (const auto& l : a) sa += l.size();
        for (const auto& l : b) sb += l.size();
        return sa < sb;
    });
    for (const auto& x : all) {
        PolytopeId id = b.add_object(chain_name(base_, x));
        chains_.push_back(x);
        index_[x] = id;
    }
    const std::size_t m = chains_.size();
    auto levelwise_leq = [&](const Chain& x, const Chain& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!family_leq(base_, x[i], y[i])) return false;
        return true;
    };
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 1; j < m; ++j)
            if (levelwise_leq(chains_[i], chains_[j])) {
                leq[i][j] = true;
                if (i != j) b.add_leq(PolytopeId{static_cast<std::uint32_t>(i)}, PolytopeId{static_cast<std::uint32_t>(j)});
            }

    for (std::size_t i = 1; i < m; ++i) {
        const Chain& x = chains_[i];
        PolytopeId xi{static_cast<std::uint32_t>(i)};
        // decomposition into the constant chains of the last level
        if (x.back().size() >= 2 || x.front() != x.back()) {
            std::vector<PolytopeId> parts;
            bool ok = true;
            for (PolytopeId a : x.back()) {
                auto id = find(constant_chain(a, n_));
                if (!id || *id == xi) ok = false;
                else parts.push_back(*id);
            }
            if (ok) b.add_cover(xi, parts);
        }
        // refine one member of the last level by a disjoint basis cover
        const Family& last = x.back();
        for (std::size_t k = 0; k < last.size(); ++k)
            for (std::size_t idx : base_.covers_on(last[k])) {
                const auto& src = base_.covering_basis()[idx].sources;
                if (n_ == 1) {
                    // f_1 C is C itself
                    std::vector<PolytopeId> parts;
                    for (PolytopeId a : src)
                        if (auto id = find(constant_chain(a, 1))) parts.push_back(*id);
                    if (parts.size() == src.size()) b.add_cover(xi, parts);
                    continue;
                }
                if (!pairwise_disjoint(base_, src)) continue;
                Chain y = x;
                y.back().erase(y.back().begin() + static_cast<long>(k));
                y.back().insert(y.back().end(), src.begin(), src.end());
                std::sort(y.back().begin(), y.back().end());
                auto id = find(y);
                if (id) b.add_cover(xi, {*id});
            }
    }

    const auto& G = base_.groupoid();
    std::size_t counter = 0;
    for (std::size_t i = 1; i < m; ++i) {
        const Chain& x = chains_[i];
        for (HorizId h : G.from(p1(x))) {
            if (G.is_identity(h)) continue;
            auto yid = find(transport(base_, h, x));
            if (!yid) continue;
            SliceMap slice;
            bool ok = true;
            for (std::size_t j = 1; j < m && ok; ++j) {
                if (!leq[j][i]) continue;
                auto zid = find(transport(base_, G.restrict_to(h, p1(chains_[j])), chains_[j]));
                if (!zid) ok = false;
                else slice.emplace_back(PolytopeId{static_cast<std::uint32_t>(j)}, *zid);
            }
            if (ok)
                b.add_horizontal("s" + std::to_string(counter++), PolytopeId{static_cast<std::uint32_t>(i)}, *yid,
                                 std::move(slice));
        }
    }
    complex_ = b.build();
}

std::optional<PolytopeId> FnComplex::find(const Chain& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

PolytopeId FnComplex::at(const Chain& x) const {
    auto id = find(x);
    if (!id)
        throw Error(ErrorCode::BoundTooSmall,
                    chain_name(base_, x) + " is not materialized in " + complex_.label());
    return *id;
}

std::optional<HorizId> FnComplex::carrier(const Chain& x, const Chain& y) const {
    const auto& G = base_.groupoid();
    for (HorizId h : G.between(p1(x), p1(y)))
        if (transport(base_, h, x) == y) return h;
    return std::nullopt;
}

std::optional<HorizId> FnComplex::lift(PolytopeId z, HorizId base_h) const {
    const auto& G = base_.groupoid();
    if (G.at(base_h).src != p1(chain(z))) return std::nullopt;
    auto dst = find(transport(base_, base_h, chain(z)));
    if (!dst) return std::nullopt;
    HorizMorphism m{z, *dst, {}};
    for (PolytopeId w : complex_.below(z)) {
        auto img = find(transport(base_, G.restrict_to(base_h, p1(chain(w))), chain(w)));
        if (!img) return std::nullopt;
        m.slice.emplace_back(w, *img);
    }
    return complex_.groupoid().find(m);
}

HorizId FnComplex::descend(HorizId h) const {
    const auto& m = complex_.groupoid().at(h);
    for (HorizId k : base_.groupoid().between(p1(chain(m.src)), p1(chain(m.dst))))
        if (lift(m.src, k) == h) return k;
    throw Error(ErrorCode::InvalidMorphism, "no base morphism induces this horizontal of " + complex_.label());
}

KleisliMorphism face_fn(const FnComplex& src, const FnComplex& dst, int i) {
    const int n = src.n();
    if (i <= 0) return identity_kleisli(src.complex());
    if (dst.n() != n - 1 || !src.base().same_as(dst.base()))
        throw Error(ErrorCode::IncompatibleComposition, "face maps f_n to f_(n-1)");
    if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "face index " + std::to_string(i));
    const auto& c = src.base();
    std::vector<std::vector<PolytopeId>> images(src.complex().size());
    for (PolytopeId x : src.complex().noninitial()) {
        const Chain& ch = src.chain(x);
        if (i >= 2) {
            Chain y = ch;
            y.erase(y.begin() + (i - 1));
            images[x.value] = {dst.at(y)};
            continue;
        }
        if (n == 1) continue;
        // split the tail into fibers over the new head
        for (PolytopeId head : ch[1]) {
            Chain y{Family{head}};
            for (std::size_t l = 2; l < ch.size(); ++l) {
                Family f;
                for (PolytopeId a : ch[l])
                    if (c.leq(a, head)) f.push_back(a);
                y.push_back(std::move(f));
            }
            images[x.value].push_back(dst.at(y));
        }
    }
    return KleisliMorphism(src.complex(), dst.complex(), std::move(images), "d" + std::to_string(i));
}

KleisliMorphism degeneracy_fn(const FnComplex& src, const FnComplex& dst, int i) {
    const int n = src.n();
    if (i <= 0) return identity_kleisli(src.complex());
    if (dst.n() != n + 1 || !src.base().same_as(dst.base()))
        throw Error(ErrorCode::IncompatibleComposition, "degeneracy maps f_n to f_(n+1)");
    if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "degeneracy index " + std::to_string(i));
    std::vector<std::vector<PolytopeId>> images(src.complex().size());
    for (PolytopeId x : src.complex().noninitial()) {
        Chain y = src.chain(x);
        y.insert(y.begin() + (i - 1), y[static_cast<std::size_t>(i - 1)]);
        images[x.value] = {dst.at(y)};
    }
    return KleisliMorphism(src.complex(), dst.complex(), std::move(images), "s" + std::to_string(i));
}

}  // namespace polycpx
