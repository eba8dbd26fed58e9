#include "polycpx/simplicial.hpp"

#include <functional>
#include <map>
#include <optional>

#include "polycpx/error.hpp"
#include "polycpx/generators.hpp"
#include "polycpx/k0.hpp"

namespace polycpx {

namespace {

using Rule = std::function<void(std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out)>;

KleisliMorphism assemble(const PolytopeComplex& src, const std::vector<std::size_t>& off, const PolytopeComplex& dst,
                         const Rule& rule, std::string label) {
    std::vector<std::vector<PolytopeId>> images(src.size());
    for (PolytopeId w : src.noninitial()) {
        auto [copy, y] = wedge_locate(off, w);
        rule(copy, y, images[w.value]);
    }
    return KleisliMorphism(src, dst, std::move(images), std::move(label));
}

// the simplicial circle: copy j of level n, 1-based
std::optional<int> bar_face(int n, int i, int j) {
    if (i == 0) return j == 1 ? std::nullopt : std::optional<int>(j - 1);
    if (i == n) return j == n ? std::nullopt : std::optional<int>(j);
    return j <= i ? j : j - 1;
}

int bar_degeneracy(int i, int j) { return j <= i ? j : j + 1; }

std::string dname(const char* d, int i) { return std::string(d) + std::to_string(i); }

void check_levels(const SimplicialComplexLevels& x, int N) {
    if (N < 0 || x.top() < N) throw Error(ErrorCode::ArgumentOutOfRange, x.label + " is truncated below level " + std::to_string(N));
}

}  // namespace

SimplicialComplexLevels constant_simplicial(const PolytopeComplex& c, int N) {
    SimplicialComplexLevels x;
    x.label = c.label();
    for (int n = 0; n <= N; ++n) {
        x.levels.push_back(c);
        x.faces.emplace_back();
        x.degeneracies.emplace_back();
        if (n > 0)
            for (int i = 0; i <= n; ++i) x.faces[n].push_back(identity_kleisli(c));
        if (n < N)
            for (int i = 0; i <= n; ++i) x.degeneracies[n].push_back(identity_kleisli(c));
    }
    return x;
}

SLevel s_complex(const PolytopeComplex& c, int n, std::size_t bound) {
    if (n < 0) throw Error(ErrorCode::ArgumentOutOfRange, "s_n needs n >= 0");
    SLevel s;
    s.n = n;
    std::vector<PolytopeComplex> parts;
    std::vector<std::string> tags;
    for (int m = 1; m <= n; ++m) {
        s.parts.emplace_back(c, m, bound);
        parts.push_back(s.parts.back().complex());
        tags.push_back("f" + std::to_string(m));
    }
    s.offsets = wedge_offsets(parts);
    s.complex = n == 0 ? trivial_complex() : wedge_all(parts, tags, "s" + std::to_string(n) + "(" + c.label() + ")");
    return s;
}

KleisliMorphism s_face(const SLevel& src, const SLevel& dst, int i) {
    const int n = src.n;
    if (dst.n != n - 1) throw Error(ErrorCode::IncompatibleComposition, "face maps s_n to s_(n-1)");
    if (i < 0 || i > n) throw Error(ErrorCode::IndexOutOfRange, "face index " + std::to_string(i));
    std::vector<std::optional<KleisliMorphism>> parts;
    for (int m = 1; m <= n; ++m) {
        const int j = m - n + i;
        if (j >= 1 && m >= 2) parts.push_back(face_fn(src.parts[m - 1], dst.parts[m - 2], j));
        else parts.emplace_back();
    }
    Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
        const int m = static_cast<int>(copy) + 1;
        const int j = m - n + i;
        if (j <= 0) {
            if (m == n) return;  // the d_0 on f_n
            out.push_back(wedge_id(dst.offsets, copy, y));
        } else if (m >= 2) {
            for (PolytopeId z : (*parts[copy])(y)) out.push_back(wedge_id(dst.offsets, copy - 1, z));
        }
    };
    return assemble(src.complex, src.offsets, dst.complex, rule, dname("d", i));
}

KleisliMorphism s_degeneracy(const SLevel& src, const SLevel& dst, int i) {
    const int n = src.n;
    if (dst.n != n + 1) throw Error(ErrorCode::IncompatibleComposition, "degeneracy maps s_n to s_(n+1)");
    if (i < 0 || i > n) throw Error(ErrorCode::IndexOutOfRange, "degeneracy index " + std::to_string(i));
    std::vector<std::optional<KleisliMorphism>> parts;
    for (int m = 1; m <= n; ++m) {
        const int j = m - n + i;
        if (j >= 1) parts.push_back(degeneracy_fn(src.parts[m - 1], dst.parts[m], j));
        else parts.emplace_back();
    }
    Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
        if (!parts[copy]) {
            out.push_back(wedge_id(dst.offsets, copy, y));
            return;
        }
        for (PolytopeId z : (*parts[copy])(y)) out.push_back(wedge_id(dst.offsets, copy + 1, z));
    };
    return assemble(src.complex, src.offsets, dst.complex, rule, dname("s", i));
}

SimplicialComplexLevels s_simplicial(const PolytopeComplex& c, int N, std::size_t bound) {
    std::vector<SLevel> s;
    for (int n = 0; n <= N; ++n) s.push_back(s_complex(c, n, bound));
    SimplicialComplexLevels x;
    x.label = "s(" + c.label() + ")";
    for (int n = 0; n <= N; ++n) {
        x.levels.push_back(s[n].complex);
        x.faces.emplace_back();
        x.degeneracies.emplace_back();
        if (n > 0)
            for (int i = 0; i <= n; ++i) x.faces[n].push_back(s_face(s[n], s[n - 1], i));
        if (n < N)
            for (int i = 0; i <= n; ++i) x.degeneracies[n].push_back(s_degeneracy(s[n], s[n + 1], i));
    }
    return x;
}

KleisliMorphism constant_inclusion(const PolytopeComplex& c, const PolytopeComplex& wedge_level, const SLevel& s) {
    const int n = s.n;
    auto off = wedge_offsets(std::vector<PolytopeComplex>(static_cast<std::size_t>(n), c));
    Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
        const int m = n - static_cast<int>(copy);
        out.push_back(wedge_id(s.offsets, static_cast<std::size_t>(m - 1), s.parts[m - 1].constant(y)));
    };
    return assemble(wedge_level, off, s.complex, rule, "const");
}

SimplicialComplexLevels bar_suspension(const SimplicialComplexLevels& x, int N) {
    if (N < 2) throw Error(ErrorCode::ArgumentOutOfRange, "bar model needs N >= 2");
    check_levels(x, N);
    SimplicialComplexLevels b;
    b.label = "bar(" + x.label + ")";
    std::vector<std::vector<std::size_t>> off;
    for (int n = 0; n <= N; ++n) {
        std::vector<PolytopeComplex> parts(static_cast<std::size_t>(n), x.levels[n]);
        std::vector<std::string> tags;
        for (int j = 1; j <= n; ++j) tags.push_back(std::to_string(j));
        off.push_back(wedge_offsets(parts));
        b.levels.push_back(n == 0 ? trivial_complex() : wedge_all(parts, tags, x.levels[n].label() + "^" + std::to_string(n)));
    }
    for (int n = 0; n <= N; ++n) {
        b.faces.emplace_back();
        b.degeneracies.emplace_back();
        for (int i = 0; n > 0 && i <= n; ++i) {
            const auto& d = x.faces[n][i];
            Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
                auto j = bar_face(n, i, static_cast<int>(copy) + 1);
                if (!j) return;
                for (PolytopeId z : d(y)) out.push_back(wedge_id(off[n - 1], static_cast<std::size_t>(*j - 1), z));
            };
            b.faces[n].push_back(assemble(b.levels[n], off[n], b.levels[n - 1], rule, dname("d", i)));
        }
        for (int i = 0; n < N && i <= n; ++i) {
            const auto& s = x.degeneracies[n][i];
            Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
                int j = bar_degeneracy(i, static_cast<int>(copy) + 1);
                for (PolytopeId z : s(y)) out.push_back(wedge_id(off[n + 1], static_cast<std::size_t>(j - 1), z));
            };
            b.degeneracies[n].push_back(assemble(b.levels[n], off[n], b.levels[n + 1], rule, dname("s", i)));
        }
    }
    return b;
}

SimplicialComplexLevels cofiber_model(const std::vector<KleisliMorphism>& g, const SimplicialComplexLevels& c,
                                      const SimplicialComplexLevels& d, int N) {
    if (N < 2) throw Error(ErrorCode::ArgumentOutOfRange, "cofiber model needs N >= 2");
    check_levels(c, N);
    check_levels(d, N);
    if (static_cast<int>(g.size()) <= N) throw Error(ErrorCode::ArgumentOutOfRange, "cofiber model needs g at every level");
    for (int n = 0; n <= N; ++n)
        if (!g[n].source().same_as(c.levels[n]) || !g[n].target().same_as(d.levels[n]))
            throw Error(ErrorCode::IncompatibleComposition, "g does not match the levels at " + std::to_string(n));
    SimplicialComplexLevels x;
    x.label = "cofiber(" + g[0].label() + ")";
    std::vector<std::vector<std::size_t>> off;
    for (int n = 0; n <= N; ++n) {
        std::vector<PolytopeComplex> parts{d.levels[n]};
        std::vector<std::string> tags{"D"};
        for (int j = 1; j <= n; ++j) {
            parts.push_back(c.levels[n]);
            tags.push_back(std::to_string(j));
        }
        off.push_back(wedge_offsets(parts));
        x.levels.push_back(wedge_all(parts, tags, x.label + "_" + std::to_string(n)));
    }
    for (int n = 0; n <= N; ++n) {
        x.faces.emplace_back();
        x.degeneracies.emplace_back();
        for (int i = 0; n > 0 && i <= n; ++i) {
            Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
                if (copy == 0) {
                    for (PolytopeId z : d.faces[n][i](y)) out.push_back(wedge_id(off[n - 1], 0, z));
                    return;
                }
                const int j = static_cast<int>(copy);
                if (i == 0 && j == 1) {
                    for (PolytopeId z : c.faces[n][0](y))
                        for (PolytopeId w : g[n - 1](z)) out.push_back(wedge_id(off[n - 1], 0, w));
                    return;
                }
                auto jj = bar_face(n, i, j);
                if (!jj) return;
                for (PolytopeId z : c.faces[n][i](y)) out.push_back(wedge_id(off[n - 1], static_cast<std::size_t>(*jj), z));
            };
            x.faces[n].push_back(assemble(x.levels[n], off[n], x.levels[n - 1], rule, dname("d", i)));
        }
        for (int i = 0; n < N && i <= n; ++i) {
            Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
                if (copy == 0) {
                    for (PolytopeId z : d.degeneracies[n][i](y)) out.push_back(wedge_id(off[n + 1], 0, z));
                    return;
                }
                int j = bar_degeneracy(i, static_cast<int>(copy));
                for (PolytopeId z : c.degeneracies[n][i](y)) out.push_back(wedge_id(off[n + 1], static_cast<std::size_t>(j), z));
            };
            x.degeneracies[n].push_back(assemble(x.levels[n], off[n], x.levels[n + 1], rule, dname("s", i)));
        }
    }
    return x;
}

SimplicialComplexLevels cofiber_model(const KleisliMorphism& g, int N) {
    return cofiber_model(std::vector<KleisliMorphism>(static_cast<std::size_t>(N + 1), g),
                         constant_simplicial(g.source(), N), constant_simplicial(g.target(), N), N);
}

SimplicialComplexLevels sphere_model(int k, int N) {
    if (k < 0 || N < 2) throw Error(ErrorCode::ArgumentOutOfRange, "sphere_model needs k >= 0 and N >= 2");
    const PolytopeComplex s = sphere_complex();
    SimplicialComplexLevels x;
    x.label = "S^" + std::to_string(k);
    // copies of level n: tuples in [1..n]^k, lexicographic
    std::vector<std::vector<std::vector<int>>> tuples;
    std::vector<std::map<std::vector<int>, std::size_t>> index;
    std::vector<std::vector<std::size_t>> off;
    for (int n = 0; n <= N; ++n) {
        std::vector<std::vector<int>> ts;
        std::vector<int> t(static_cast<std::size_t>(k), 1);
        if (k == 0) ts.push_back(t);
        else if (n > 0)
            while (true) {
                ts.push_back(t);
                int p = k - 1;
                while (p >= 0 && t[p] == n) t[p--] = 1;
                if (p < 0) break;
                ++t[p];
            }
        std::map<std::vector<int>, std::size_t> idx;
        std::vector<std::string> tags;
        for (std::size_t q = 0; q < ts.size(); ++q) {
            idx[ts[q]] = q;
            std::string tag;
            for (int v : ts[q]) tag += (tag.empty() ? "" : ".") + std::to_string(v);
            tags.push_back(tag.empty() ? "e" : tag);
        }
        std::vector<PolytopeComplex> parts(ts.size(), s);
        off.push_back(wedge_offsets(parts));
        x.levels.push_back(ts.empty() ? trivial_complex() : wedge_all(parts, tags, x.label + "_" + std::to_string(n)));
        tuples.push_back(std::move(ts));
        index.push_back(std::move(idx));
    }
    for (int n = 0; n <= N; ++n) {
        x.faces.emplace_back();
        x.degeneracies.emplace_back();
        for (int i = 0; n > 0 && i <= n; ++i) {
            Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
                std::vector<int> t = tuples[n][copy];
                for (int& v : t) {
                    auto w = bar_face(n, i, v);
                    if (!w) return;
                    v = *w;
                }
                out.push_back(wedge_id(off[n - 1], index[n - 1].at(t), y));
            };
            x.faces[n].push_back(assemble(x.levels[n], off[n], x.levels[n - 1], rule, dname("d", i)));
        }
        for (int i = 0; n < N && i <= n; ++i) {
            Rule rule = [&](std::size_t copy, PolytopeId y, std::vector<PolytopeId>& out) {
                std::vector<int> t = tuples[n][copy];
                for (int& v : t) v = bar_degeneracy(i, v);
                out.push_back(wedge_id(off[n + 1], index[n + 1].at(t), y));
            };
            x.degeneracies[n].push_back(assemble(x.levels[n], off[n], x.levels[n + 1], rule, dname("s", i)));
        }
    }
    return x;
}

Report verify_simplicial_identities(const SimplicialComplexLevels& x) {
    Report r;
    r.title = "simplicial identities on " + x.label;
    const int N = x.top();
    auto compare = [&](const KleisliMorphism& lhs, const KleisliMorphism& rhs, const std::string& what, int n) {
        for (PolytopeId y : x.levels[n].noninitial()) {
            ++r.checked;
            if (lhs(y) != rhs(y)) {
                r.fail(what, "level " + std::to_string(n) + " at " + x.levels[n].name(y) + ": " +
                                 family_string(lhs.target(), lhs(y)) + " vs " + family_string(rhs.target(), rhs(y)));
                return;
            }
        }
    };
    auto D = [&](int n, int i) -> const KleisliMorphism& { return x.faces.at(n).at(i); };
    auto S = [&](int n, int i) -> const KleisliMorphism& { return x.degeneracies.at(n).at(i); };
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                compare(kleisli_compose(D(n, j), D(n - 1, i)), kleisli_compose(D(n, i), D(n - 1, j - 1)),
                        "d" + std::to_string(i) + "d" + std::to_string(j) + " = d" + std::to_string(j - 1) + "d" +
                            std::to_string(i),
                        n);
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                compare(kleisli_compose(S(n, j), S(n + 1, i)), kleisli_compose(S(n, i), S(n + 1, j + 1)),
                        "s" + std::to_string(i) + "s" + std::to_string(j) + " = s" + std::to_string(j + 1) + "s" +
                            std::to_string(i),
                        n);
    for (int n = 0; n + 1 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                auto lhs = kleisli_compose(S(n, j), D(n + 1, i));
                std::string what = "d" + std::to_string(i) + "s" + std::to_string(j);
                if (i == j || i == j + 1) {
                    compare(lhs, identity_kleisli(x.levels[n]), what + " = id", n);
                } else if (n == 0) {
                    continue;
                } else if (i < j) {
                    compare(lhs, kleisli_compose(D(n, i), S(n - 1, j - 1)),
                            what + " = s" + std::to_string(j - 1) + "d" + std::to_string(i), n);
                } else {
                    compare(lhs, kleisli_compose(D(n, i - 1), S(n - 1, j)),
                            what + " = s" + std::to_string(j) + "d" + std::to_string(i - 1), n);
                }
            }
    return r;
}

IntMatrix kleisli_matrix(const KleisliMorphism& f) {
    IntMatrix m(f.target().size() - 1, f.source().size() - 1);
    for (PolytopeId x : f.source().noninitial())
        for (PolytopeId y : f(x)) m(k0_index(y), k0_index(x)) += 1;
    return m;
}

ChainComplexZ k0_chain_complex(const SimplicialComplexLevels& x, int N) {
    check_levels(x, N);
    std::vector<FpAbelianGroup> groups;
    for (int m = 0; m <= N; ++m) groups.push_back(k0(x.levels[m]));
    std::vector<IntMatrix> d;
    for (int m = 1; m <= N; ++m) {
        IntMatrix acc(x.levels[m - 1].size() - 1, x.levels[m].size() - 1);
        for (int i = 0; i <= m; ++i) {
            IntMatrix f = kleisli_matrix(x.faces[m][i]);
            for (std::size_t r = 0; r < f.rows(); ++r)
                for (std::size_t c = 0; c < f.cols(); ++c)
                    acc(r, c) += (i % 2 == 0 ? 1 : -1) * f(r, c);
        }
        d.push_back(std::move(acc));
    }
    return ChainComplexZ(std::move(groups), std::move(d));
}

}  // namespace polycpx
