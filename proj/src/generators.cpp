#include "polycpx/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "polycpx/error.hpp"

namespace polycpx {

PolytopeComplex trivial_complex() { return PolytopeComplex(); }

PolytopeComplex sphere_complex() {
    ComplexBuilder b("sphere");
    b.add_object("*");
    return b.build();
}

namespace {

std::string interval_name(int i, int j) { return "[" + std::to_string(i) + ".." + std::to_string(j) + "]"; }

}  // namespace

PolytopeComplex interval_complex(int n) {
    if (n < 1) throw Error(ErrorCode::ArgumentOutOfRange, "interval_complex needs n >= 1");
    ComplexBuilder b("interval(" + std::to_string(n) + ")");
    std::map<std::pair<int, int>, PolytopeId> id;
    for (int len = 1; len <= n; ++len)
        for (int i = 0; i + len <= n; ++i) id[{i, i + len}] = b.add_object(interval_name(i, i + len));
    for (const auto& [iv, x] : id)
        for (const auto& [jv, y] : id)
            if (x != y && jv.first <= iv.first && iv.second <= jv.second) b.add_leq(x, y);
    // every partition into consecutive pieces, given by a nonempty set of interior cuts
    for (const auto& [iv, x] : id) {
        int inner = iv.second - iv.first - 1;
        for (int mask = 1; mask < (1 << inner); ++mask) {
            std::vector<PolytopeId> parts;
            int start = iv.first;
            for (int k = 0; k < inner; ++k) {
                if (mask & (1 << k)) {
                    int cut = iv.first + k + 1;
                    parts.push_back(id.at({start, cut}));
                    start = cut;
                }
            }
            parts.push_back(id.at({start, iv.second}));
            b.add_cover(x, parts);
        }
    }
    int counter = 0;
    for (const auto& [iv, x] : id)
        for (const auto& [jv, y] : id) {
            int t = jv.first - iv.first;
            if (t <= 0 || jv.second - jv.first != iv.second - iv.first) continue;
            SliceMap slice;
            for (const auto& [kv, z] : id)
                if (iv.first <= kv.first && kv.second <= iv.second) slice.emplace_back(z, id.at({kv.first + t, kv.second + t}));
            b.add_horizontal("t" + std::to_string(counter++), x, y, slice);
        }
    return b.build();
}

namespace {

struct Rect {
    int x0, y0, x1, y1;
    int area() const { return (x1 - x0) * (y1 - y0); }
    bool inside(const Rect& o) const { return o.x0 <= x0 && o.y0 <= y0 && x1 <= o.x1 && y1 <= o.y1; }
    auto key() const { return std::make_tuple(area(), y0, x0, y1, x1); }
};

std::string rect_name(const Rect& r) {
    return "[" + std::to_string(r.x0) + ".." + std::to_string(r.x1) + "]x[" + std::to_string(r.y0) + ".." +
           std::to_string(r.y1) + "]";
}

// All tilings of `outer` by grid rectangles, as lists of pieces.
void tilings(const Rect& outer, std::vector<std::vector<bool>>& filled, std::vector<Rect>& current,
             std::vector<std::vector<Rect>>& out) {
    int fx = -1, fy = -1;
    for (int y = outer.y0; y < outer.y1 && fx < 0; ++y)
        for (int x = outer.x0; x < outer.x1; ++x)
            if (!filled[y][x]) {
                fx = x;
                fy = y;
                break;
            }
    if (fx < 0) {
        out.push_back(current);
        return;
    }
    for (int x1 = fx + 1; x1 <= outer.x1; ++x1) {
        if (filled[fy][x1 - 1]) break;
        for (int y1 = fy + 1; y1 <= outer.y1; ++y1) {
            bool free = true;
            for (int x = fx; x < x1 && free; ++x)
                if (filled[y1 - 1][x]) free = false;
            if (!free) break;
            for (int y = fy; y < y1; ++y)
                for (int x = fx; x < x1; ++x) filled[y][x] = true;
            current.push_back({fx, fy, x1, y1});
            tilings(outer, filled, current, out);
            current.pop_back();
            for (int y = fy; y < y1; ++y)
                for (int x = fx; x < x1; ++x) filled[y][x] = false;
        }
    }
}

}  // namespace

PolytopeComplex grid_complex(int w, int h) {
    if (w < 1 || h < 1) throw Error(ErrorCode::ArgumentOutOfRange, "grid_complex needs w, h >= 1");
    ComplexBuilder b("grid(" + std::to_string(w) + "," + std::to_string(h) + ")");
    std::vector<Rect> rects;
    for (int x0 = 0; x0 < w; ++x0)
        for (int x1 = x0 + 1; x1 <= w; ++x1)
            for (int y0 = 0; y0 < h; ++y0)
                for (int y1 = y0 + 1; y1 <= h; ++y1) rects.push_back({x0, y0, x1, y1});
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& c) { return a.key() < c.key(); });
    std::map<std::tuple<int, int, int, int>, PolytopeId> id;
    for (const auto& r : rects) id[{r.x0, r.y0, r.x1, r.y1}] = b.add_object(rect_name(r));
    auto of = [&](const Rect& r) { return id.at({r.x0, r.y0, r.x1, r.y1}); };

    for (const auto& r : rects)
        for (const auto& s : rects)
            if (of(r) != of(s) && r.inside(s)) b.add_leq(of(r), of(s));

    std::vector<std::vector<bool>> filled(h, std::vector<bool>(w, false));
    for (const auto& r : rects) {
        std::vector<std::vector<Rect>> all;
        std::vector<Rect> current;
        tilings(r, filled, current, all);
        for (const auto& t : all) {
            if (t.size() < 2) continue;
            std::vector<PolytopeId> parts;
            for (const auto& p : t) parts.push_back(of(p));
            b.add_cover(of(r), parts);
        }
    }

    int counter = 0;
    for (const auto& r : rects)
        for (const auto& s : rects) {
            int dx = s.x0 - r.x0, dy = s.y0 - r.y0;
            if (s.x1 - s.x0 != r.x1 - r.x0 || s.y1 - s.y0 != r.y1 - r.y0) continue;
            if (std::make_pair(dy, dx) <= std::make_pair(0, 0)) continue;
            SliceMap slice;
            for (const auto& z : rects)
                if (z.inside(r)) slice.emplace_back(of(z), of({z.x0 + dx, z.y0 + dy, z.x1 + dx, z.y1 + dy}));
            b.add_horizontal("t" + std::to_string(counter++), of(r), of(s), slice);
        }
    return b.build();
}

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> f;
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

// set partitions of {0..k-1}, as block labels
void set_partitions(int k, int i, std::vector<int>& label, int blocks, std::vector<std::vector<int>>& out) {
    if (i == k) {
        out.push_back(label);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        label[i] = b;
        set_partitions(k, i + 1, label, std::max(blocks, b + 1), out);
    }
}

}  // namespace

PolytopeComplex divisor_complex(long long n) {
    if (n < 2) throw Error(ErrorCode::ArgumentOutOfRange, "divisor_complex needs N >= 2");
    ComplexBuilder b("divisor(" + std::to_string(n) + ")");
    std::vector<long long> divs;
    for (long long d = 2; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    std::map<long long, PolytopeId> id;
    for (long long d : divs) id[d] = b.add_object(std::to_string(d));
    for (long long d : divs)
        for (long long e : divs)
            if (d != e && e % d == 0) b.add_leq(id[d], id[e]);
    for (long long d : divs) {
        auto f = factorize(d);
        int k = static_cast<int>(f.size());
        if (k < 2) continue;
        std::vector<std::vector<int>> parts;
        std::vector<int> label(k, 0);
        set_partitions(k, 0, label, 0, parts);
        for (const auto& p : parts) {
            int nb = *std::max_element(p.begin(), p.end()) + 1;
            if (nb < 2) continue;
            std::vector<long long> prod(nb, 1);
            for (int i = 0; i < k; ++i)
                for (int e = 0; e < f[i].second; ++e) prod[p[i]] *= f[i].first;
            std::vector<PolytopeId> fam;
            for (long long q : prod) fam.push_back(id[q]);
            b.add_cover(id[d], fam);
        }
    }
    return b.build();
}

std::vector<std::size_t> wedge_offsets(const std::vector<PolytopeComplex>& parts) {
    std::vector<std::size_t> off;
    std::size_t acc = 0;
    for (const auto& p : parts) {
        off.push_back(acc);
        acc += p.size() - 1;
    }
    off.push_back(acc);
    return off;
}

PolytopeId wedge_id(const std::vector<std::size_t>& offsets, std::size_t copy, PolytopeId x) {
    if (x == kInitial) return kInitial;
    return PolytopeId{static_cast<std::uint32_t>(offsets.at(copy) + x.value)};
}

std::pair<std::size_t, PolytopeId> wedge_locate(const std::vector<std::size_t>& offsets, PolytopeId w) {
    if (w == kInitial) return {0, kInitial};
    for (std::size_t k = 0; k + 1 < offsets.size(); ++k)
        if (w.value > offsets[k] && w.value <= offsets[k + 1])
            return {k, PolytopeId{static_cast<std::uint32_t>(w.value - offsets[k])}};
    throw Error(ErrorCode::IndexOutOfRange, "object not in wedge");
}

PolytopeComplex wedge_all(const std::vector<PolytopeComplex>& parts, const std::vector<std::string>& tags,
                          const std::string& label) {
    ComplexBuilder b(label);
    auto off = wedge_offsets(parts);
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (PolytopeId x : parts[k].noninitial()) b.add_object(tags[k] + "/" + parts[k].name(x));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& c = parts[k];
        auto w = [&](PolytopeId x) { return wedge_id(off, k, x); };
        for (const auto& [x, y] : c.hasse_edges()) b.add_leq(w(x), w(y));
        for (const auto& f : c.covering_basis()) {
            std::vector<PolytopeId> s;
            for (PolytopeId x : f.sources) s.push_back(w(x));
            b.add_cover(w(f.target), s);
        }
        for (const auto& h : c.horizontal_generators()) {
            SliceMap slice;
            for (const auto& [x, y] : h.slice) slice.emplace_back(w(x), w(y));
            b.add_horizontal(tags[k] + "/" + h.name, w(h.src), w(h.dst), slice);
        }
        for (const auto& p : c.declared_pullbacks()) b.declare_pullback(w(p.x), w(p.y), w(p.c), w(p.z));
    }
    return b.build();
}

PolytopeComplex wedge(const PolytopeComplex& c, const PolytopeComplex& d) {
    return wedge_all({c, d}, {"1", "2"}, "(" + c.label() + " v " + d.label() + ")");
}

PolytopeComplex wedge_power(const PolytopeComplex& c, int n) {
    if (n < 0) throw Error(ErrorCode::ArgumentOutOfRange, "wedge_power needs n >= 0");
    std::vector<PolytopeComplex> parts(static_cast<std::size_t>(n), c);
    std::vector<std::string> tags;
    for (int k = 1; k <= n; ++k) tags.push_back(std::to_string(k));
    if (n == 0) return trivial_complex();
    return wedge_all(parts, tags, c.label() + "^" + std::to_string(n));
}

PolytopeComplex add_twists(const PolytopeComplex& c) {
    PolytopeComplex w = wedge(c, c);
    ComplexBuilder b = builder_from(w, "twisted(" + c.label() + ")");
    auto off = wedge_offsets({c, c});
    for (PolytopeId x : c.noninitial()) {
        SliceMap slice;
        for (PolytopeId z : c.below(x)) slice.emplace_back(wedge_id(off, 0, z), wedge_id(off, 1, z));
        b.add_horizontal("twist/" + c.name(x), wedge_id(off, 0, x), wedge_id(off, 1, x), slice);
    }
    return b.build();
}

PolytopeComplex full_subcomplex(const PolytopeComplex& c, const std::vector<PolytopeId>& keep_in,
                                const std::string& label) {
    std::vector<PolytopeId> keep = keep_in;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    keep.erase(std::remove(keep.begin(), keep.end(), kInitial), keep.end());
    ComplexBuilder b(label, c.name(kInitial));
    std::map<PolytopeId, PolytopeId> to;
    to[kInitial] = kInitial;
    for (PolytopeId x : keep) to[x] = b.add_object(c.name(x));
    for (PolytopeId x : keep)
        for (PolytopeId y : keep)
            if (x != y && c.leq(x, y)) b.add_leq(to[x], to[y]);
    for (const auto& f : c.covering_basis()) {
        if (!to.count(f.target)) continue;
        std::vector<PolytopeId> s;
        bool inside = true;
        for (PolytopeId x : f.sources) {
            if (!to.count(x)) inside = false;
            else s.push_back(to[x]);
        }
        if (inside) b.add_cover(to[f.target], s);
    }
    const auto& g = c.groupoid();
    int counter = 0;
    for (HorizId h = 0; h < g.size(); ++h) {
        const auto& m = g.at(h);
        if (m.src == kInitial || g.is_identity(h) || !to.count(m.src) || !to.count(m.dst)) continue;
        SliceMap slice;
        bool ok = true;
        for (const auto& [x, y] : m.slice) {
            bool ix = to.count(x) > 0, iy = to.count(y) > 0;
            if (ix != iy) ok = false;
            if (ix && iy) slice.emplace_back(to[x], to[y]);
        }
        if (ok) b.add_horizontal("h" + std::to_string(counter++), to[m.src], to[m.dst], slice);
    }
    return b.build();
}

}  // namespace polycpx
