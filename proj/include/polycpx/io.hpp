#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycpx/complex.hpp"
#include "polycpx/error.hpp"
#include "polycpx/functor.hpp"

namespace polycpx {

struct SourceLocation {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
};

class ParseError : public Error {
public:
    ParseError(ErrorCode code, SourceLocation where, const std::string& message);
    SourceLocation location() const { return where_; }
    const std::string& detail() const { return detail_; }

private:
    SourceLocation where_;
    std::string detail_;
};

// Grammar in docs/grammar.md. Throws ParseError.
PolytopeComplex parse_complex(std::string_view text);
std::string print_complex(const PolytopeComplex& c);
PolytopeComplex load_complex(const std::string& path);

struct MorphismLine {
    std::string object;
    std::vector<std::string> images;
    SourceLocation where;
};

struct MorphismDocument {
    bool kleisli = true;
    std::string label;
    std::optional<std::string> source;  // complex labels, informational
    std::optional<std::string> target;
    std::vector<MorphismLine> lines;
};

MorphismDocument parse_morphism_document(std::string_view text);
MorphismDocument load_morphism_document(const std::string& path);
// unlisted objects go to the empty family; functor documents need every object
KleisliMorphism resolve_kleisli(const MorphismDocument& doc, const PolytopeComplex& source,
                                const PolytopeComplex& target);
std::string print_morphism(const KleisliMorphism& f, bool as_functor = false);

std::string read_file(const std::string& path);

}  // namespace polycpx
