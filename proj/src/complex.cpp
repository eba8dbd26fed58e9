#include "polycpx/complex.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "polycpx/error.hpp"

namespace polycpx {

struct PolytopeComplex::Impl {
    std::string label;
    std::vector<std::string> names;
    std::map<std::string, PolytopeId, std::less<>> lookup;
    std::vector<Bits> down;
    std::vector<Bits> up;
    std::vector<CoverFamily> covers;
    std::vector<std::vector<std::size_t>> covers_on;
    std::vector<HorizontalGenerator> horizontal;
    std::vector<PullbackDecl> pullbacks;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, PolytopeId> pullback_index;

    mutable std::once_flag groupoid_once;
    mutable std::unique_ptr<HorizontalGroupoid> groupoid;
};

namespace {

PolytopeId lookup_slice(const SliceMap& s, PolytopeId x) {
    if (x == kInitial) return kInitial;
    auto it = std::lower_bound(s.begin(), s.end(), std::make_pair(x, kInitial),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == s.end() || it->first != x) return kInitial;
    return it->second;
}

HorizMorphism inverse_raw(const HorizMorphism& m) {
    HorizMorphism r{m.dst, m.src, {}};
    r.slice.reserve(m.slice.size());
    for (const auto& [a, b] : m.slice) r.slice.emplace_back(b, a);
    std::sort(r.slice.begin(), r.slice.end());
    return r;
}

HorizMorphism compose_raw(const HorizMorphism& first, const HorizMorphism& second) {
    HorizMorphism r{first.src, second.dst, {}};
    r.slice.reserve(first.slice.size());
    for (const auto& [a, b] : first.slice) r.slice.emplace_back(a, lookup_slice(second.slice, b));
    return r;
}

HorizMorphism restrict_raw(const PolytopeComplex& c, const HorizMorphism& m, PolytopeId x) {
    HorizMorphism r{x, lookup_slice(m.slice, x), {}};
    for (const auto& [a, b] : m.slice)
        if (c.leq(a, x)) r.slice.emplace_back(a, b);
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// HorizontalGroupoid

HorizontalGroupoid::Key HorizontalGroupoid::key_of(const HorizMorphism& m) {
    std::vector<std::uint32_t> flat;
    flat.reserve(m.slice.size() * 2);
    for (const auto& [a, b] : m.slice) {
        flat.push_back(a.value);
        flat.push_back(b.value);
    }
    return {m.src.value, m.dst.value, std::move(flat)};
}

HorizontalGroupoid::HorizontalGroupoid(const PolytopeComplex& c, std::size_t bound) {
    const std::size_t n = c.size();
    from_.assign(n, {});
    std::vector<std::vector<HorizId>> into(n);

    auto add = [&](HorizMorphism m) -> HorizId {
        auto key = key_of(m);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        if (morphisms_.size() >= bound + 1)
            throw Error(ErrorCode::ClosureBoundExceeded,
                        "more than " + std::to_string(bound) + " horizontal morphisms in " + c.label());
        HorizId id = static_cast<HorizId>(morphisms_.size());
        from_[m.src.value].push_back(id);
        into[m.dst.value].push_back(id);
        morphisms_.push_back(std::move(m));
        index_.emplace(std::move(key), id);
        return id;
    };

    identity_.assign(n, 0);
    identity_[0] = add(HorizMorphism{kInitial, kInitial, {}});
    for (PolytopeId x : c.noninitial()) {
        HorizMorphism id{x, x, {}};
        for (PolytopeId z : c.below(x)) id.slice.emplace_back(z, z);
        identity_[x.value] = add(std::move(id));
    }
    for (const auto& g : c.horizontal_generators()) add(HorizMorphism{g.src, g.dst, g.slice});

    for (std::size_t i = 0; i < morphisms_.size(); ++i) {
        HorizMorphism m = morphisms_[i];
        if (m.src == kInitial) continue;
        add(inverse_raw(m));
        for (const auto& [z, w] : m.slice)
            if (z != m.src) add(restrict_raw(c, m, z));
        std::vector<HorizId> after = from_[m.dst.value];
        for (HorizId j : after) add(compose_raw(m, morphisms_[j]));
        std::vector<HorizId> before = into[m.src.value];
        for (HorizId j : before) add(compose_raw(morphisms_[j], m));
    }
}

HorizId HorizontalGroupoid::lookup(const HorizMorphism& m) const {
    auto it = index_.find(key_of(m));
    if (it == index_.end()) throw std::logic_error("horizontal groupoid is not closed");
    return it->second;
}

std::optional<HorizId> HorizontalGroupoid::find(const HorizMorphism& m) const {
    auto it = index_.find(key_of(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

HorizId HorizontalGroupoid::inverse(HorizId h) const { return lookup(inverse_raw(at(h))); }

HorizId HorizontalGroupoid::compose(HorizId first, HorizId second) const {
    if (at(first).dst != at(second).src)
        throw Error(ErrorCode::IncompatibleComposition, "horizontal morphisms do not compose");
    return lookup(compose_raw(at(first), at(second)));
}

HorizId HorizontalGroupoid::restrict_to(HorizId h, PolytopeId x) const {
    const auto& m = at(h);
    if (x == kInitial) return identity(kInitial);
    if (x == m.src) return h;
    HorizMorphism r{x, lookup_slice(m.slice, x), {}};
    for (const auto& [z, zz] : at(identity(x)).slice) {
        (void)zz;
        r.slice.emplace_back(z, lookup_slice(m.slice, z));
    }
    return lookup(r);
}

PolytopeId HorizontalGroupoid::apply(HorizId h, PolytopeId x) const { return lookup_slice(at(h).slice, x); }

bool HorizontalGroupoid::is_identity(HorizId h) const {
    const auto& m = at(h);
    return m.src == m.dst && identity(m.src) == h;
}

std::vector<HorizId> HorizontalGroupoid::between(PolytopeId src, PolytopeId dst) const {
    std::vector<HorizId> out;
    for (HorizId h : from(src))
        if (at(h).dst == dst) out.push_back(h);
    return out;
}

bool HorizontalGroupoid::isomorphic(PolytopeId x, PolytopeId y) const {
    for (HorizId h : from(x))
        if (at(h).dst == y) return true;
    return false;
}

// ---------------------------------------------------------------------------
// PolytopeComplex

PolytopeComplex::PolytopeComplex() {
    ComplexBuilder b("trivial");
    *this = b.build();
}

const std::string& PolytopeComplex::label() const { return impl_->label; }
std::size_t PolytopeComplex::size() const { return impl_->names.size(); }

std::vector<PolytopeId> PolytopeComplex::objects() const {
    std::vector<PolytopeId> out(size());
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = PolytopeId{i};
    return out;
}

std::vector<PolytopeId> PolytopeComplex::noninitial() const {
    std::vector<PolytopeId> out;
    for (std::uint32_t i = 1; i < size(); ++i) out.push_back(PolytopeId{i});
    return out;
}

const std::string& PolytopeComplex::name(PolytopeId x) const { return impl_->names.at(x.value); }

std::optional<PolytopeId> PolytopeComplex::find(std::string_view name) const {
    auto it = impl_->lookup.find(name);
    if (it == impl_->lookup.end()) return std::nullopt;
    return it->second;
}

bool PolytopeComplex::leq(PolytopeId x, PolytopeId y) const { return impl_->down.at(y.value).test(x.value); }
const Bits& PolytopeComplex::down(PolytopeId x) const { return impl_->down.at(x.value); }
const Bits& PolytopeComplex::up(PolytopeId x) const { return impl_->up.at(x.value); }

std::vector<PolytopeId> PolytopeComplex::below(PolytopeId x) const {
    std::vector<PolytopeId> out;
    const Bits& d = down(x);
    for (auto i = d.find_next(0); i != Bits::npos; i = d.find_next(i))
        out.push_back(PolytopeId{static_cast<std::uint32_t>(i)});
    return out;
}

std::optional<PolytopeId> PolytopeComplex::meet(PolytopeId x, PolytopeId y) const {
    if (x == y) return x;
    if (leq(x, y)) return x;
    if (leq(y, x)) return y;
    Bits lower = down(x) & down(y);
    std::size_t count = lower.count();
    for (auto i = lower.find_first(); i != Bits::npos; i = lower.find_next(i)) {
        const Bits& d = impl_->down[i];
        if (d.count() == count && d == lower) return PolytopeId{static_cast<std::uint32_t>(i)};
    }
    return std::nullopt;
}

bool PolytopeComplex::have_common_bound(PolytopeId x, PolytopeId y) const { return (up(x) & up(y)).any(); }

std::optional<PolytopeId> PolytopeComplex::pullback(PolytopeId x, PolytopeId y, PolytopeId c) const {
    if (!leq(x, c) || !leq(y, c)) return std::nullopt;
    auto it = impl_->pullback_index.find({x.value, y.value, c.value});
    if (it != impl_->pullback_index.end()) return it->second;
    return meet(x, y);
}

const std::vector<CoverFamily>& PolytopeComplex::covering_basis() const { return impl_->covers; }
const std::vector<std::size_t>& PolytopeComplex::covers_on(PolytopeId t) const {
    return impl_->covers_on.at(t.value);
}
const std::vector<HorizontalGenerator>& PolytopeComplex::horizontal_generators() const {
    return impl_->horizontal;
}
const std::vector<PullbackDecl>& PolytopeComplex::declared_pullbacks() const { return impl_->pullbacks; }

std::vector<std::pair<PolytopeId, PolytopeId>> PolytopeComplex::hasse_edges() const {
    std::vector<std::pair<PolytopeId, PolytopeId>> out;
    for (PolytopeId y : noninitial()) {
        for (PolytopeId x : below(y)) {
            if (x == y) continue;
            Bits between = up(x) & down(y);
            if (between.count() == 2) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const HorizontalGroupoid& PolytopeComplex::groupoid() const {
    std::call_once(impl_->groupoid_once, [this] {
        impl_->groupoid = std::make_unique<HorizontalGroupoid>(*this, kDefaultClosureBound);
    });
    return *impl_->groupoid;
}

// ---------------------------------------------------------------------------
// ComplexBuilder

ComplexBuilder::ComplexBuilder(std::string label, std::string initial_name) : label_(std::move(label)) {
    names_.push_back(initial_name);
    lookup_.emplace(std::move(initial_name), kInitial);
}

void ComplexBuilder::set_initial_name(std::string name) {
    lookup_.erase(names_[0]);
    if (lookup_.count(name)) throw Error(ErrorCode::DuplicateDeclaration, "object " + name);
    names_[0] = name;
    lookup_.emplace(std::move(name), kInitial);
}

PolytopeId ComplexBuilder::add_object(const std::string& name) {
    if (lookup_.count(name)) throw Error(ErrorCode::DuplicateDeclaration, "object " + name);
    PolytopeId id{static_cast<std::uint32_t>(names_.size())};
    names_.push_back(name);
    lookup_.emplace(name, id);
    return id;
}

std::optional<PolytopeId> ComplexBuilder::find(std::string_view name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

PolytopeId ComplexBuilder::at(std::string_view name) const {
    auto id = find(name);
    if (!id) throw Error(ErrorCode::UnknownObject, std::string(name));
    return *id;
}

void ComplexBuilder::add_leq(PolytopeId x, PolytopeId y) { leq_.emplace_back(x, y); }

void ComplexBuilder::add_cover(PolytopeId target, std::vector<PolytopeId> sources) {
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    CoverFamily f{target, std::move(sources)};
    if (std::find(covers_.begin(), covers_.end(), f) != covers_.end()) return;
    covers_.push_back(std::move(f));
}

void ComplexBuilder::add_horizontal(std::string name, PolytopeId src, PolytopeId dst, SliceMap slice) {
    std::sort(slice.begin(), slice.end());
    for (const auto& h : horizontal_)
        if (h.name == name) throw Error(ErrorCode::DuplicateDeclaration, "horizontal " + name);
    horizontal_.push_back({std::move(name), src, dst, std::move(slice)});
}

void ComplexBuilder::declare_pullback(PolytopeId x, PolytopeId y, PolytopeId c, PolytopeId z) {
    pullbacks_.push_back({x, y, c, z});
}

PolytopeComplex ComplexBuilder::build() const {
    auto impl = std::make_shared<PolytopeComplex::Impl>();
    const std::size_t n = names_.size();
    impl->label = label_;
    impl->names = names_;
    for (const auto& [k, v] : lookup_) impl->lookup.emplace(k, v);

    // reachability closure: down[y] holds every x <= y
    std::vector<Bits> down(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
        down[i].set(i);
        down[i].set(0);
    }
    for (const auto& [x, y] : leq_) down[y.value].set(x.value);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (down[i].test(k)) down[i] |= down[k];
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t y = 0; y < n; ++y)
        for (auto x = down[y].find_first(); x != Bits::npos; x = down[y].find_next(x)) up[x].set(y);
    impl->down = std::move(down);
    impl->up = std::move(up);

    impl->covers = covers_;
    impl->covers_on.assign(n, {});
    for (std::size_t i = 0; i < covers_.size(); ++i) impl->covers_on[covers_[i].target.value].push_back(i);
    impl->horizontal = horizontal_;
    impl->pullbacks = pullbacks_;
    for (const auto& p : pullbacks_) {
        impl->pullback_index[{p.x.value, p.y.value, p.c.value}] = p.z;
        impl->pullback_index[{p.y.value, p.x.value, p.c.value}] = p.z;
    }
    return PolytopeComplex(std::move(impl));
}

ComplexBuilder builder_from(const PolytopeComplex& c, const std::string& label) {
    ComplexBuilder b(label, c.name(kInitial));
    for (PolytopeId x : c.noninitial()) b.add_object(c.name(x));
    for (const auto& [x, y] : c.hasse_edges()) b.add_leq(x, y);
    for (const auto& f : c.covering_basis()) b.add_cover(f.target, f.sources);
    for (const auto& h : c.horizontal_generators()) b.add_horizontal(h.name, h.src, h.dst, h.slice);
    for (const auto& p : c.declared_pullbacks()) b.declare_pullback(p.x, p.y, p.c, p.z);
    return b;
}

bool same_presentation(const PolytopeComplex& a, const PolytopeComplex& b) {
    if (a.size() != b.size()) return false;
    for (PolytopeId x : a.objects()) {
        if (a.name(x) != b.name(x)) return false;
        if (a.down(x) != b.down(x)) return false;
    }
    return a.covering_basis() == b.covering_basis() &&
           a.horizontal_generators() == b.horizontal_generators() &&
           a.declared_pullbacks() == b.declared_pullbacks();
}

std::string family_string(const PolytopeComplex& c, const std::vector<PolytopeId>& family) {
    std::string s = "{";
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (i) s += ", ";
        s += c.name(family[i]);
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// predicates

bool disjoint(const PolytopeComplex& c, PolytopeId x, PolytopeId y) {
    Bits common = c.up(x) & c.up(y);
    for (auto i = common.find_first(); i != Bits::npos; i = common.find_next(i)) {
        auto p = c.pullback(x, y, PolytopeId{static_cast<std::uint32_t>(i)});
        if (p && *p == kInitial) return true;
    }
    return false;
}

bool pairwise_disjoint(const PolytopeComplex& c, const std::vector<PolytopeId>& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!disjoint(c, family[i], family[j])) return false;
    return true;
}

const char* tri_name(Tri t) {
    switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
    }
    return "?";
}

std::vector<std::vector<PolytopeId>> local_families(const PolytopeComplex& c, PolytopeId target) {
    std::set<std::vector<PolytopeId>> found;
    const Bits& above = c.up(target);
    for (auto i = above.find_first(); i != Bits::npos; i = above.find_next(i)) {
        PolytopeId d{static_cast<std::uint32_t>(i)};
        for (std::size_t idx : c.covers_on(d)) {
            std::vector<PolytopeId> g;
            bool bad = false;
            for (PolytopeId s : c.covering_basis()[idx].sources) {
                if (d == target) {
                    g.push_back(s);
                    continue;
                }
                auto m = c.meet(s, target);
                if (!m) {
                    bad = true;
                    break;
                }
                if (*m != kInitial) g.push_back(*m);
            }
            if (bad || g.empty()) continue;
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
            if (std::find(g.begin(), g.end(), target) != g.end()) continue;
            found.insert(std::move(g));
        }
    }
    return {found.begin(), found.end()};
}

Tri is_cover(const PolytopeComplex& c, const std::vector<PolytopeId>& family, PolytopeId target, int depth_bound) {
    std::map<std::pair<std::uint32_t, int>, Tri> memo;
    std::map<std::uint32_t, std::vector<std::vector<PolytopeId>>> families;

    auto in_sieve = [&](PolytopeId z) {
        for (PolytopeId s : family)
            if (c.leq(z, s)) return true;
        return false;
    };

    auto rec = [&](auto&& self, PolytopeId m, int depth) -> Tri {
        if (m == kInitial || in_sieve(m)) return Tri::True;
        if (depth <= 0) return Tri::Unknown;
        auto key = std::make_pair(m.value, depth);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        auto fit = families.find(m.value);
        if (fit == families.end()) fit = families.emplace(m.value, local_families(c, m)).first;
        bool unknown = false;
        Tri result = Tri::False;
        for (const auto& f : fit->second) {
            Tri all = Tri::True;
            for (PolytopeId s : f) {
                Tri r = self(self, s, depth - 1);
                if (r == Tri::False) {
                    all = Tri::False;
                    break;
                }
                if (r == Tri::Unknown) all = Tri::Unknown;
            }
            if (all == Tri::True) {
                result = Tri::True;
                break;
            }
            if (all == Tri::Unknown) unknown = true;
        }
        if (result != Tri::True && unknown) result = Tri::Unknown;
        memo[key] = result;
        return result;
    };
    return rec(rec, target, depth_bound);
}

// ---------------------------------------------------------------------------
// validation

Report validate_complex(const PolytopeComplex& c) {
    Report r;
    r.title = "validate " + c.label();
    auto nm = [&](PolytopeId x) { return c.name(x); };
    const auto objs = c.noninitial();

    for (PolytopeId x : c.objects())
        if (!c.leq(kInitial, x)) r.fail("initial not below", nm(x));

    for (PolytopeId x : objs)
        for (PolytopeId y : objs)
            if (x < y && c.leq(x, y) && c.leq(y, x))
                r.fail("vertical not antisymmetric", "(" + nm(x) + ", " + nm(y) + ")");

    for (PolytopeId x : objs)
        for (PolytopeId y : objs)
            if (x < y && c.have_common_bound(x, y) && !c.meet(x, y))
                r.fail("missing pullback", "(" + nm(x) + ", " + nm(y) + ")");

    for (const auto& p : c.declared_pullbacks()) {
        std::string w = "(" + nm(p.x) + "," + nm(p.y) + "|" + nm(p.c) + ") = " + nm(p.z);
        if (!c.leq(p.x, p.c) || !c.leq(p.y, p.c)) {
            r.fail("pullback outside slice", w);
            continue;
        }
        if (!c.leq(p.z, p.x) || !c.leq(p.z, p.y) || !c.leq(p.z, p.c)) {
            r.fail("pullback not lower bound", w);
            continue;
        }
        auto m = c.meet(p.x, p.y);
        if (!m || *m != p.z) r.fail("pullback not greatest lower bound", w);
    }
    ++r.checked;

    for (const auto& f : c.covering_basis()) {
        for (PolytopeId s : f.sources) {
            if (s == kInitial) r.fail("initial object in cover", nm(f.target) + " <- " + family_string(c, f.sources));
            else if (!c.leq(s, f.target))
                r.fail("cover source not below target", nm(s) + " in " + nm(f.target) + " <- " + family_string(c, f.sources));
        }
    }

    for (const auto& h : c.horizontal_generators()) {
        std::string w = h.name + ": " + nm(h.src) + " -> " + nm(h.dst);
        if (h.src == kInitial || h.dst == kInitial) {
            r.fail("horizontal generator on initial object", w);
            continue;
        }
        auto src_down = c.below(h.src);
        auto dst_down = c.below(h.dst);
        std::vector<PolytopeId> keys, vals;
        for (const auto& [a, b] : h.slice) {
            keys.push_back(a);
            vals.push_back(b);
        }
        auto sorted_vals = vals;
        std::sort(sorted_vals.begin(), sorted_vals.end());
        if (keys != src_down || sorted_vals != dst_down ||
            std::adjacent_find(sorted_vals.begin(), sorted_vals.end()) != sorted_vals.end()) {
            r.fail("slice map not a bijection", w);
            continue;
        }
        auto img = [&](PolytopeId x) {
            if (x == kInitial) return kInitial;
            auto it = std::lower_bound(keys.begin(), keys.end(), x);
            return vals[static_cast<std::size_t>(it - keys.begin())];
        };
        if (img(h.src) != h.dst) r.fail("slice map does not send source to target", w);
        for (PolytopeId x : src_down)
            for (PolytopeId y : src_down)
                if (c.leq(x, y) != c.leq(img(x), img(y)))
                    r.fail("slice map does not preserve order", w + " at (" + nm(x) + ", " + nm(y) + ")");
        for (PolytopeId x : src_down)
            for (PolytopeId y : src_down) {
                if (!(x < y)) continue;
                auto m = c.meet(x, y);
                auto mi = c.meet(img(x), img(y));
                if (m && mi && img(*m) != *mi)
                    r.fail("slice map breaks pullback", w + " at (" + nm(x) + ", " + nm(y) + ")");
            }
        for (const auto& f : c.covering_basis()) {
            if (!c.leq(f.target, h.src)) continue;
            std::vector<PolytopeId> fam;
            for (PolytopeId s : f.sources) fam.push_back(img(s));
            Tri t = is_cover(c, fam, img(f.target));
            if (t == Tri::False)
                r.fail("slice map breaks cover", w + " at " + nm(f.target) + " <- " + family_string(c, f.sources));
            else if (t == Tri::Unknown)
                r.note("cover image undecided within depth bound: " + w + " at " + nm(f.target));
        }
        ++r.checked;
    }

    try {
        (void)c.groupoid();
    } catch (const Error& e) {
        r.fail("closure bound exceeded", e.what());
    }
    r.checked += objs.size();
    return r;
}

PolytopeComplex horizontal_closure(const PolytopeComplex& c, std::size_t bound) {
    HorizontalGroupoid g(c, bound);
    std::map<std::tuple<PolytopeId, PolytopeId, SliceMap>, std::string> names;
    std::set<std::string> taken;
    for (const auto& h : c.horizontal_generators()) {
        names.emplace(std::make_tuple(h.src, h.dst, h.slice), h.name);
        taken.insert(h.name);
    }
    std::vector<HorizMorphism> ms;
    for (HorizId i = 0; i < g.size(); ++i)
        if (g.at(i).src != kInitial && !g.is_identity(i)) ms.push_back(g.at(i));
    std::sort(ms.begin(), ms.end(), [](const HorizMorphism& a, const HorizMorphism& b) {
        return std::tie(a.src, a.dst, a.slice) < std::tie(b.src, b.dst, b.slice);
    });

    ComplexBuilder b(c.label(), c.name(kInitial));
    for (PolytopeId x : c.noninitial()) b.add_object(c.name(x));
    for (const auto& [x, y] : c.hasse_edges()) b.add_leq(x, y);
    for (const auto& f : c.covering_basis()) b.add_cover(f.target, f.sources);
    for (const auto& p : c.declared_pullbacks()) b.declare_pullback(p.x, p.y, p.c, p.z);
    std::size_t counter = 0;
    for (const auto& m : ms) {
        auto it = names.find(std::make_tuple(m.src, m.dst, m.slice));
        std::string name;
        if (it != names.end()) {
            name = it->second;
        } else {
            do name = "g" + std::to_string(counter++);
            while (taken.count(name));
            taken.insert(name);
        }
        b.add_horizontal(name, m.src, m.dst, m.slice);
    }
    return b.build();
}

}  // namespace polycpx
