#include "polycpx/thicken.hpp"

#include <algorithm>
#include <set>

#include "polycpx/error.hpp"

namespace polycpx {

std::string family_name(const PolytopeComplex& c, const Family& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "+" : "") + c.name(f[i]);
    return s + "]";
}

Thickening::Thickening(PolytopeComplex base, std::size_t size_bound) : base_(std::move(base)), bound_(size_bound) {
    if (size_bound == 0) throw Error(ErrorCode::ArgumentOutOfRange, "thickening bound must be at least 1");
    const auto objs = base_.noninitial();
    const std::size_t n = objs.size();
    std::vector<std::vector<bool>> dis(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) dis[i][j] = dis[j][i] = disjoint(base_, objs[i], objs[j]);

    std::vector<Family> fams;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!cur.empty()) {
            Family f;
            for (std::size_t i : cur) f.push_back(objs[i]);
            fams.push_back(std::move(f));
        }
        for (std::size_t i = start; i < n; ++i) {
            bool ok = true;
            for (std::size_t j : cur) ok = ok && dis[i][j];
            if (!ok) continue;
            if (cur.size() == bound_) {
                truncated_ = true;
                continue;
            }
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::stable_sort(fams.begin(), fams.end(), [](const Family& a, const Family& b) { return a.size() < b.size(); });

    ComplexBuilder b("(" + base_.label() + ")^id", base_.name(kInitial));
    families_.push_back({});
    index_[{}] = kInitial;
    for (const auto& f : fams) {
        PolytopeId id = b.add_object(family_name(base_, f));
        families_.push_back(f);
        index_[f] = id;
    }
    const std::size_t m = families_.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 1; j < m; ++j)
            if (family_leq(base_, families_[i], families_[j])) {
                leq[i][j] = true;
                if (i != j) b.add_leq(PolytopeId{static_cast<std::uint32_t>(i)}, PolytopeId{static_cast<std::uint32_t>(j)});
            }

    for (std::size_t i = 1; i < m; ++i) {
        const Family& x = families_[i];
        PolytopeId xi{static_cast<std::uint32_t>(i)};
        if (x.size() >= 2) {
            std::vector<PolytopeId> parts;
            for (PolytopeId a : x) parts.push_back(index_.at({a}));
            b.add_cover(xi, parts);
        }
        // refine one member by a disjoint basis cover
        for (std::size_t k = 0; k < x.size(); ++k)
            for (std::size_t idx : base_.covers_on(x[k])) {
                const auto& src = base_.covering_basis()[idx].sources;
                if (!pairwise_disjoint(base_, src)) continue;
                Family y;
                for (std::size_t l = 0; l < x.size(); ++l)
                    if (l != k) y.push_back(x[l]);
                y.insert(y.end(), src.begin(), src.end());
                auto id = find(y);
                if (id) b.add_cover(xi, {*id});
            }
    }

    // move one member along a horizontal morphism
    const auto& G = base_.groupoid();
    std::size_t counter = 0;
    for (std::size_t i = 1; i < m; ++i) {
        const Family& x = families_[i];
        for (std::size_t k = 0; k < x.size(); ++k)
            for (HorizId h : G.from(x[k])) {
                if (G.is_identity(h)) continue;
                Family y = x;
                y[k] = G.at(h).dst;
                if (!pairwise_disjoint(base_, y)) continue;
                auto yid = find(y);
                if (!yid) continue;
                SliceMap slice;
                bool ok = true;
                for (std::size_t j = 1; j < m && ok; ++j) {
                    if (!leq[j][i]) continue;
                    Family z;
                    for (PolytopeId a : families_[j]) z.push_back(base_.leq(a, x[k]) ? G.apply(h, a) : a);
                    auto zid = find(z);
                    if (!zid) ok = false;
                    else slice.emplace_back(PolytopeId{static_cast<std::uint32_t>(j)}, *zid);
                }
                if (!ok) continue;
                b.add_horizontal("m" + std::to_string(counter++), PolytopeId{static_cast<std::uint32_t>(i)}, *yid,
                                 std::move(slice));
            }
    }
    complex_ = b.build();
}

std::optional<PolytopeId> Thickening::find(Family f) const {
    std::sort(f.begin(), f.end());
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

PolytopeId Thickening::at(Family f) const {
    auto id = find(f);
    if (!id)
        throw Error(ErrorCode::BoundTooSmall,
                    family_name(base_, f) + " is not materialized at bound " + std::to_string(bound_));
    return *id;
}

Thickening thicken(const PolytopeComplex& c, std::size_t size_bound) { return Thickening(c, size_bound); }

PolytopeFunctor eta(const Thickening& t) {
    std::vector<PolytopeId> map(t.base().size(), kInitial);
    for (PolytopeId a : t.base().noninitial()) map[a.value] = t.singleton(a);
    return PolytopeFunctor(t.base(), t.complex(), std::move(map), "eta");
}

PolytopeId flatten(const Thickening& t, const Thickening& tt, PolytopeId x) {
    Family f;
    for (PolytopeId y : tt.family(x))
        for (PolytopeId a : t.family(y)) f.push_back(a);
    return t.at(f);
}

PolytopeFunctor mu(const Thickening& t, const Thickening& tt) {
    if (!tt.base().same_as(t.complex()))
        throw Error(ErrorCode::IncompatibleComposition, "mu needs the thickening of the thickening");
    std::vector<PolytopeId> map(tt.complex().size(), kInitial);
    for (PolytopeId x : tt.complex().noninitial()) map[x.value] = flatten(t, tt, x);
    return PolytopeFunctor(tt.complex(), t.complex(), std::move(map), "mu");
}

ScObject nu_apply(const Thickening& t, const ScObject& b) {
    ScObject out{t.base(), {}};
    for (PolytopeId x : b.members)
        for (PolytopeId a : t.family(x)) out.members.push_back(a);
    return out;
}

ScObject sc_eta(const Thickening& t, const ScObject& a) {
    ScObject out{t.complex(), {}};
    for (PolytopeId x : a.members) out.members.push_back(t.singleton(x));
    return out;
}

ScMorphism nu_unit(const Thickening& t, const ScObject& b) {
    ScObject target = sc_eta(t, nu_apply(t, b));
    std::vector<std::size_t> parent;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t k = 0; k < t.family(b[i]).size(); ++k) parent.push_back(i);
    return pure_sub_map(b, target, parent);
}

Report check_monad_laws(const PolytopeComplex& c, const MonadCheckOptions& opts) {
    Report r;
    r.title = "monad laws on " + c.label() + " (bound " + std::to_string(opts.bound) + ")";
    Thickening t(c, opts.bound);
    Thickening tt(t.complex(), opts.bound);
    Thickening ttt(tt.complex(), opts.bound);

    // flatten one level: families of objects of `inner` to an object of `inner`
    auto mu_at = [&](const Thickening& lo, const Thickening& hi, PolytopeId x,
                     bool corrupt) -> std::optional<PolytopeId> {
        Family f;
        for (PolytopeId y : hi.family(x))
            for (PolytopeId a : lo.family(y)) f.push_back(a);
        std::sort(f.begin(), f.end());
        if (corrupt && opts.corrupt_mu) f = opts.corrupt_mu(f);
        return lo.find(f);
    };
    auto miss = [&](const std::string& what) {
        r.partial = true;
        r.note("outside bound: " + what);
    };
    const auto& T = t.complex();
    const auto& TT = tt.complex();

    for (PolytopeId x : T.noninitial()) {
        ++r.checked;
        auto ex = tt.find({x});
        if (!ex) {
            miss(T.name(x));
            continue;
        }
        auto lhs = mu_at(t, tt, *ex, true);
        if (lhs != x) r.fail("left unit law", T.name(x) + " |-> " + (lhs ? T.name(*lhs) : std::string("?")));

        Family singles;
        for (PolytopeId a : t.family(x)) singles.push_back(t.singleton(a));
        auto tx = tt.find(singles);
        if (!tx) {
            miss(family_name(T, singles));
            continue;
        }
        auto rhs = mu_at(t, tt, *tx, true);
        if (rhs != x) r.fail("right unit law", T.name(x) + " |-> " + (rhs ? T.name(*rhs) : std::string("?")));
    }

    for (PolytopeId w : ttt.complex().noninitial()) {
        ++r.checked;
        auto a = mu_at(tt, ttt, w, false);
        std::optional<PolytopeId> left = a ? mu_at(t, tt, *a, true) : std::nullopt;
        Family inner;
        bool ok = true;
        for (PolytopeId xi : ttt.family(w)) {
            auto m = mu_at(t, tt, xi, true);
            if (!m) ok = false;
            else inner.push_back(*m);
        }
        std::optional<PolytopeId> b = ok ? tt.find(inner) : std::nullopt;
        std::optional<PolytopeId> right = b ? mu_at(t, tt, *b, true) : std::nullopt;
        if (!a || !b) {
            miss(ttt.complex().name(w));
            continue;
        }
        if (left != right)
            r.fail("associativity law", ttt.complex().name(w) + ": " + (left ? T.name(*left) : std::string("?")) +
                                            " vs " + (right ? T.name(*right) : std::string("?")));
    }
    (void)TT;
    if (t.truncated()) r.note("larger pairwise-disjoint families exist beyond the bound");
    return r;
}

const char* algebra_outcome_name(AlgebraOutcome o) {
    switch (o) {
    case AlgebraOutcome::Found: return "Found";
    case AlgebraOutcome::Contradiction: return "Contradiction";
    case AlgebraOutcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

struct Search {
    const PolytopeComplex& c;
    const Thickening& t;
    const Thickening& tt;
    const PolytopeComplex& T;
    std::size_t node_limit;

    std::vector<std::vector<PolytopeId>> domain;  // by T id
    std::vector<std::string> reason;              // why a domain became a singleton
    std::vector<std::pair<PolytopeId, PolytopeId>> order;  // X < Y
    struct Pb {
        PolytopeId x, y, z;
    };
    std::vector<Pb> pullbacks;
    std::vector<std::pair<PolytopeId, PolytopeId>> horiz;
    std::vector<PolytopeId> assign;
    std::size_t nodes = 0;
    bool truncated = false;

    std::string fam(PolytopeId x) const { return x == kInitial ? c.name(kInitial) : family_string(c, t.family(x)); }
    PolytopeId meet0(PolytopeId u, PolytopeId v) const {
        if (u == kInitial || v == kInitial) return kInitial;
        auto m = c.meet(u, v);
        return m ? *m : kInitial;
    }
};

}  // namespace

AlgebraResult algebra_search(const PolytopeComplex& c, std::size_t bound, std::size_t node_limit) {
    AlgebraResult res;
    Thickening t(c, bound);
    Thickening tt(t.complex(), std::min<std::size_t>(bound, 2));
    const auto& T = t.complex();
    Search s{c, t, tt, T, node_limit, {}, {}, {}, {}, {}, {}, 0, false};
    const std::size_t m = T.size();
    s.domain.assign(m, {});
    s.reason.assign(m, "");
    s.domain[0] = {kInitial};

    for (PolytopeId x : T.noninitial()) {
        const Family& f = t.family(x);
        Bits up = c.up(f[0]);
        for (PolytopeId a : f) up &= c.up(a);
        up.reset(0);
        for (auto i = up.find_first(); i != Bits::npos; i = up.find_next(i))
            s.domain[x.value].push_back(PolytopeId{static_cast<std::uint32_t>(i)});
        if (f.size() == 1) {
            s.domain[x.value] = {f[0]};
        } else if (s.domain[x.value].size() == 1) {
            std::string members;
            for (std::size_t k = 0; k < f.size(); ++k) members += (k ? " and " : "") + c.name(f[k]);
            s.reason[x.value] = "F(" + s.fam(x) + ") lies above " + members + "; the only common upper bound is " +
                                c.name(s.domain[x.value][0]) + ", so F(" + s.fam(x) + ") = " +
                                c.name(s.domain[x.value][0]);
        }
    }
    for (PolytopeId x : T.noninitial())
        for (PolytopeId y : T.noninitial())
            if (x != y && T.leq(x, y)) s.order.emplace_back(x, y);
    for (PolytopeId x : T.noninitial())
        for (PolytopeId y : T.noninitial()) {
            if (!(x < y) || !T.have_common_bound(x, y)) continue;
            if (T.leq(x, y) || T.leq(y, x)) continue;
            auto z = T.meet(x, y);
            if (z) s.pullbacks.push_back({x, y, *z});
        }
    std::stable_sort(s.pullbacks.begin(), s.pullbacks.end(), [&](const Search::Pb& a, const Search::Pb& b) {
        return t.family(a.x).size() + t.family(a.y).size() < t.family(b.x).size() + t.family(b.y).size();
    });
    for (const auto& h : T.horizontal_generators()) s.horiz.emplace_back(h.src, h.dst);

    auto line = [&](const std::string& text) {
        res.derivation.push_back(std::to_string(res.derivation.size() + 1) + ". " + text);
    };
    auto contradiction = [&](PolytopeId x, PolytopeId y, PolytopeId z) {
        for (PolytopeId v : {x, y})
            if (!s.reason[v.value].empty()) line(s.reason[v.value]);
        if (s.domain[x.value].size() == 1 && s.domain[y.value].size() == 1) {
            PolytopeId u = s.domain[x.value][0], v = s.domain[y.value][0];
            PolytopeId w = s.meet0(u, v);
            line(s.fam(x) + " and " + s.fam(y) + " meet in " + s.fam(z) + " in C^id, so F(" + s.fam(z) + ") = F(" +
                 s.fam(x) + ") ∧ F(" + s.fam(y) + ") = " + c.name(u) + " ∧ " + c.name(v) + " = " + c.name(w));
            if (z == kInitial)
                line("F preserves the initial object, so F(" + s.fam(z) + ") = " + c.name(kInitial) + "; hence " +
                     c.name(kInitial) + " = " + c.name(w) + ". Contradiction.");
            else
                line("but F(" + s.fam(z) + ") cannot be " + c.name(w) + ". Contradiction.");
        } else {
            line("no values of F(" + s.fam(x) + ") and F(" + s.fam(y) + ") have pullback F(" + s.fam(z) +
                 "). Contradiction.");
        }
        res.outcome = AlgebraOutcome::Contradiction;
    };

    // forced values that already clash with an empty pullback
    {
        std::vector<Search::Pb> empty_meets;
        for (const auto& pb : s.pullbacks)
            if (pb.z == kInitial) empty_meets.push_back(pb);
        std::stable_sort(empty_meets.begin(), empty_meets.end(), [&](const Search::Pb& a, const Search::Pb& b) {
            auto small = [&](const Search::Pb& p) { return std::min(t.family(p.x).size(), t.family(p.y).size()) < 2; };
            return small(a) < small(b);
        });
        for (const auto& pb : empty_meets)
            if (s.domain[pb.x.value].size() == 1 && s.domain[pb.y.value].size() == 1 &&
                s.meet0(s.domain[pb.x.value][0], s.domain[pb.y.value][0]) != kInitial) {
                contradiction(pb.x, pb.y, pb.z);
                return res;
            }
    }

    // propagation to a fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        auto prune = [&](PolytopeId x, auto keep) {
            auto& d = s.domain[x.value];
            std::size_t before = d.size();
            d.erase(std::remove_if(d.begin(), d.end(), [&](PolytopeId u) { return !keep(u); }), d.end());
            if (d.size() != before) changed = true;
            return !d.empty();
        };
        for (const auto& [x, y] : s.order) {
            bool ok = prune(x, [&](PolytopeId u) {
                for (PolytopeId v : s.domain[y.value])
                    if (c.leq(u, v)) return true;
                return false;
            });
            ok = ok && prune(y, [&](PolytopeId v) {
                for (PolytopeId u : s.domain[x.value])
                    if (c.leq(u, v)) return true;
                return false;
            });
            if (!ok) {
                line("F(" + s.fam(x) + ") <= F(" + s.fam(y) + ") has no solution. Contradiction.");
                res.outcome = AlgebraOutcome::Contradiction;
                return res;
            }
        }
        for (const auto& pb : s.pullbacks) {
            auto compatible = [&](PolytopeId u, PolytopeId v) {
                PolytopeId w = s.meet0(u, v);
                return std::find(s.domain[pb.z.value].begin(), s.domain[pb.z.value].end(), w) !=
                       s.domain[pb.z.value].end();
            };
            bool conflict = false;
            if (s.domain[pb.x.value].size() == 1 && s.domain[pb.y.value].size() == 1 &&
                !compatible(s.domain[pb.x.value][0], s.domain[pb.y.value][0]))
                conflict = true;
            if (!conflict) {
                bool ok = prune(pb.x, [&](PolytopeId u) {
                    for (PolytopeId v : s.domain[pb.y.value])
                        if (compatible(u, v)) return true;
                    return false;
                });
                ok = ok && prune(pb.y, [&](PolytopeId v) {
                    for (PolytopeId u : s.domain[pb.x.value])
                        if (compatible(u, v)) return true;
                    return false;
                });
                conflict = !ok;
            }
            if (conflict) {
                contradiction(pb.x, pb.y, pb.z);
                return res;
            }
        }
    }

    // backtracking over the remaining choices
    std::vector<PolytopeId> vars = T.noninitial();
    std::stable_sort(vars.begin(), vars.end(),
                     [&](PolytopeId a, PolytopeId b) { return t.family(a).size() < t.family(b).size(); });
    std::vector<bool> set(m, false);
    s.assign.assign(m, kInitial);
    set[0] = true;

    auto consistent = [&]() {
        for (const auto& [x, y] : s.order)
            if (set[x.value] && set[y.value] && !c.leq(s.assign[x.value], s.assign[y.value])) return false;
        for (const auto& pb : s.pullbacks)
            if (set[pb.x.value] && set[pb.y.value] && set[pb.z.value] &&
                s.meet0(s.assign[pb.x.value], s.assign[pb.y.value]) != s.assign[pb.z.value])
                return false;
        for (const auto& [x, y] : s.horiz)
            if (set[x.value] && set[y.value] && s.assign[x.value] != s.assign[y.value] &&
                !c.groupoid().isomorphic(s.assign[x.value], s.assign[y.value]))
                return false;
        return true;
    };
    auto leaf_ok = [&]() {
        for (PolytopeId w : tt.complex().noninitial()) {
            Family flat;
            for (PolytopeId y : tt.family(w))
                for (PolytopeId a : t.family(y)) flat.push_back(a);
            auto mw = t.find(flat);
            Family imgs;
            for (PolytopeId y : tt.family(w)) imgs.push_back(s.assign[y.value]);
            std::sort(imgs.begin(), imgs.end());
            if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end() || !pairwise_disjoint(c, imgs))
                return false;
            auto fy = t.find(imgs);
            if (mw && fy && s.assign[mw->value] != s.assign[fy->value]) return false;
        }
        for (const auto& fam : T.covering_basis()) {
            std::vector<PolytopeId> imgs;
            for (PolytopeId y : fam.sources) imgs.push_back(s.assign[y.value]);
            if (is_cover(c, imgs, s.assign[fam.target.value]) == Tri::False) return false;
        }
        return true;
    };

    bool found = false;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (found || s.truncated) return;
        if (++s.nodes > node_limit) {
            s.truncated = true;
            return;
        }
        if (k == vars.size()) {
            if (leaf_ok()) found = true;
            return;
        }
        PolytopeId x = vars[k];
        for (PolytopeId u : s.domain[x.value]) {
            s.assign[x.value] = u;
            set[x.value] = true;
            if (consistent()) self(self, k + 1);
            if (found || s.truncated) return;
            set[x.value] = false;
        }
    };
    rec(rec, 0);
    res.nodes = s.nodes;
    if (found) {
        res.outcome = AlgebraOutcome::Found;
        for (PolytopeId x : vars) {
            res.assignment.emplace_back(s.fam(x), c.name(s.assign[x.value]));
            if (t.family(x).size() >= 2) line("F(" + s.fam(x) + ") = " + c.name(s.assign[x.value]));
        }
        if (res.derivation.empty()) line("F is determined by F({a}) = a");
    } else if (s.truncated) {
        res.outcome = AlgebraOutcome::Inconclusive;
        line("search stopped after " + std::to_string(node_limit) + " nodes");
    } else {
        res.outcome = AlgebraOutcome::Contradiction;
        line("exhaustive search over " + std::to_string(s.nodes) + " partial assignments found no algebra map");
    }
    if (t.truncated()) line("note: families larger than " + std::to_string(bound) + " were not materialized");
    return res;
}

}  // namespace polycpx
