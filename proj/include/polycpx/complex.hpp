#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polycpx/report.hpp"

namespace polycpx {

struct PolytopeId {
    std::uint32_t value = 0;
    friend auto operator<=>(const PolytopeId&, const PolytopeId&) = default;
};

// The initial object of every complex.
inline constexpr PolytopeId kInitial{0};

using Bits = boost::dynamic_bitset<>;

// Pairs (x, image of x) sorted by x; the initial object is implicit.
using SliceMap = std::vector<std::pair<PolytopeId, PolytopeId>>;

struct CoverFamily {
    PolytopeId target;
    std::vector<PolytopeId> sources;  // sorted, distinct
    friend bool operator==(const CoverFamily&, const CoverFamily&) = default;
};

struct HorizontalGenerator {
    std::string name;
    PolytopeId src;
    PolytopeId dst;
    SliceMap slice;
    friend bool operator==(const HorizontalGenerator&, const HorizontalGenerator&) = default;
};

struct PullbackDecl {
    PolytopeId x, y, c, z;
    friend bool operator==(const PullbackDecl&, const PullbackDecl&) = default;
};

inline constexpr std::size_t kDefaultClosureBound = 10000;
inline constexpr int kDefaultCoverDepth = 8;

using HorizId = std::uint32_t;

struct HorizMorphism {
    PolytopeId src;
    PolytopeId dst;
    SliceMap slice;
};

class PolytopeComplex;

// The groupoid generated by the horizontal generators, closed under
// composition, inverse and restriction to sub-objects.
class HorizontalGroupoid {
public:
    HorizontalGroupoid(const PolytopeComplex& c, std::size_t bound);

    std::size_t size() const { return morphisms_.size(); }
    const HorizMorphism& at(HorizId h) const { return morphisms_.at(h); }
    HorizId identity(PolytopeId x) const { return identity_.at(x.value); }
    HorizId inverse(HorizId h) const;
    // second after first
    HorizId compose(HorizId first, HorizId second) const;
    HorizId restrict_to(HorizId h, PolytopeId x) const;
    PolytopeId apply(HorizId h, PolytopeId x) const;
    bool is_identity(HorizId h) const;
    std::optional<HorizId> find(const HorizMorphism& m) const;
    const std::vector<HorizId>& from(PolytopeId src) const { return from_.at(src.value); }
    std::vector<HorizId> between(PolytopeId src, PolytopeId dst) const;
    bool isomorphic(PolytopeId x, PolytopeId y) const;

private:
    using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;
    static Key key_of(const HorizMorphism& m);
    HorizId lookup(const HorizMorphism& m) const;

    std::vector<HorizMorphism> morphisms_;
    std::map<Key, HorizId> index_;
    std::vector<HorizId> identity_;
    std::vector<std::vector<HorizId>> from_;
};

class PolytopeComplex {
public:
    PolytopeComplex();  // the trivial complex

    const std::string& label() const;
    std::size_t size() const;  // including the initial object
    std::vector<PolytopeId> objects() const;
    std::vector<PolytopeId> noninitial() const;
    const std::string& name(PolytopeId x) const;
    std::optional<PolytopeId> find(std::string_view name) const;

    bool leq(PolytopeId x, PolytopeId y) const;
    const Bits& down(PolytopeId x) const;
    const Bits& up(PolytopeId x) const;
    std::vector<PolytopeId> below(PolytopeId x) const;  // noninitial, includes x
    std::optional<PolytopeId> meet(PolytopeId x, PolytopeId y) const;
    bool have_common_bound(PolytopeId x, PolytopeId y) const;
    // defined when x <= c and y <= c; declared values take precedence over the computed meet
    std::optional<PolytopeId> pullback(PolytopeId x, PolytopeId y, PolytopeId c) const;

    const std::vector<CoverFamily>& covering_basis() const;
    const std::vector<std::size_t>& covers_on(PolytopeId target) const;
    const std::vector<HorizontalGenerator>& horizontal_generators() const;
    const std::vector<PullbackDecl>& declared_pullbacks() const;
    std::vector<std::pair<PolytopeId, PolytopeId>> hasse_edges() const;

    const HorizontalGroupoid& groupoid() const;

    bool same_as(const PolytopeComplex& other) const { return impl_ == other.impl_; }

    struct Impl;

private:
    friend class ComplexBuilder;
    explicit PolytopeComplex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

class ComplexBuilder {
public:
    explicit ComplexBuilder(std::string label, std::string initial_name = "empty");

    PolytopeId add_object(const std::string& name);
    std::optional<PolytopeId> find(std::string_view name) const;
    PolytopeId at(std::string_view name) const;
    std::size_t size() const { return names_.size(); }
    void add_leq(PolytopeId x, PolytopeId y);
    void add_cover(PolytopeId target, std::vector<PolytopeId> sources);
    void add_horizontal(std::string name, PolytopeId src, PolytopeId dst, SliceMap slice);
    void declare_pullback(PolytopeId x, PolytopeId y, PolytopeId c, PolytopeId z);
    void set_initial_name(std::string name);

    PolytopeComplex build() const;

private:
    std::string label_;
    std::vector<std::string> names_;
    std::map<std::string, PolytopeId, std::less<>> lookup_;
    std::vector<std::pair<PolytopeId, PolytopeId>> leq_;
    std::vector<CoverFamily> covers_;
    std::vector<HorizontalGenerator> horizontal_;
    std::vector<PullbackDecl> pullbacks_;
};

// Structural equality of presentations (same names, order, covers, generators).
bool same_presentation(const PolytopeComplex& a, const PolytopeComplex& b);

ComplexBuilder builder_from(const PolytopeComplex& c, const std::string& label);

Report validate_complex(const PolytopeComplex& c);

bool disjoint(const PolytopeComplex& c, PolytopeId x, PolytopeId y);
bool pairwise_disjoint(const PolytopeComplex& c, const std::vector<PolytopeId>& family);

enum class Tri { False, True, Unknown };
const char* tri_name(Tri t);

Tri is_cover(const PolytopeComplex& c, const std::vector<PolytopeId>& family, PolytopeId target,
             int depth_bound = kDefaultCoverDepth);

// Families usable to refine `target`: basis families on it and pullbacks of
// basis families on objects above it. Identity-like families are dropped.
std::vector<std::vector<PolytopeId>> local_families(const PolytopeComplex& c, PolytopeId target);

PolytopeComplex horizontal_closure(const PolytopeComplex& c, std::size_t bound = kDefaultClosureBound);

std::string family_string(const PolytopeComplex& c, const std::vector<PolytopeId>& family);

}  // namespace polycpx
