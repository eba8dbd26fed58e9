#include "polycpx/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace polycpx {

ParseError::ParseError(ErrorCode code, SourceLocation where, const std::string& message)
    : Error(code, "line " + std::to_string(where.line) + ", column " + std::to_string(where.column) + ": " + message),
      where_(where),
      detail_(message) {}

namespace {

bool is_name_char(char ch) {
    switch (ch) {
        case ',': case '{': case '}': case '(': case ')': case '|': case '=': case ':': case '<': case '>':
        case '-': case ' ': case '\t': case '\r': case '#':
            return false;
        default:
            return true;
    }
}

struct Token {
    enum Kind { Name, Punct } kind;
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::size_t indent;
    std::vector<Token> tokens;
    std::string raw;  // comment-stripped, trimmed
};

[[noreturn]] void fail(ErrorCode code, std::size_t line, std::size_t col, const std::string& msg) {
    throw ParseError(code, SourceLocation{line, col}, msg);
}

std::vector<Line> lex(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view s = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        // a '#' at the start or after whitespace begins a comment
        std::size_t cut = s.size();
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '#' && (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t')) {
                cut = i;
                break;
            }
        s = s.substr(0, cut);
        Line line{number, 0, {}, {}};
        std::size_t i = 0;
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        line.indent = i;
        std::size_t last = s.find_last_not_of(" \t\r");
        if (last == std::string_view::npos || last < i) {
            if (end == text.size()) break;
            continue;
        }
        line.raw = std::string(s.substr(i, last - i + 1));
        while (i < s.size()) {
            char ch = s[i];
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++i;
                continue;
            }
            std::size_t col = i + 1;
            if (is_name_char(ch)) {
                std::size_t j = i;
                while (j < s.size() && is_name_char(s[j])) ++j;
                line.tokens.push_back({Token::Name, std::string(s.substr(i, j - i)), col});
                i = j;
                continue;
            }
            if (s.substr(i, 3) == "|->") {
                line.tokens.push_back({Token::Punct, "|->", col});
                i += 3;
            } else if (s.substr(i, 2) == "<=" || s.substr(i, 2) == "<-" || s.substr(i, 2) == "->") {
                line.tokens.push_back({Token::Punct, std::string(s.substr(i, 2)), col});
                i += 2;
            } else if (ch == '#') {
                fail(ErrorCode::SyntaxError, number, col, "unexpected '#'");
            } else if (ch == '-' || ch == '<' || ch == '>') {
                fail(ErrorCode::SyntaxError, number, col, std::string("unexpected '") + ch + "'");
            } else {
                line.tokens.push_back({Token::Punct, std::string(1, ch), col});
                ++i;
            }
        }
        out.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return out;
}

// Cursor over one line's tokens.
struct Cursor {
    const Line& line;
    std::size_t i = 0;

    std::size_t column() const {
        if (i < line.tokens.size()) return line.tokens[i].column;
        return line.indent + line.raw.size() + 1;
    }
    bool at_end() const { return i == line.tokens.size(); }
    bool peek(const char* p) const {
        return i < line.tokens.size() && line.tokens[i].kind == Token::Punct && line.tokens[i].text == p;
    }
    void expect(const char* p) {
        if (!peek(p)) {
            std::string got = at_end() ? "end of line" : "'" + line.tokens[i].text + "'";
            fail(ErrorCode::SyntaxError, line.number, column(), std::string("expected '") + p + "', found " + got);
        }
        ++i;
    }
    const Token& name() {
        if (i >= line.tokens.size() || line.tokens[i].kind != Token::Name) {
            std::string got = at_end() ? "end of line" : "'" + line.tokens[i].text + "'";
            fail(ErrorCode::SyntaxError, line.number, column(), "expected a name, found " + got);
        }
        return line.tokens[i++];
    }
    void done() {
        if (!at_end())
            fail(ErrorCode::SyntaxError, line.number, column(), "unexpected '" + line.tokens[i].text + "'");
    }
};

const std::set<std::string> kSections{"objects", "initial", "vertical", "pullback", "covers", "horizontal"};

bool is_header(const Line& l) {
    return l.tokens.size() == 2 && l.tokens[0].kind == Token::Name && l.tokens[1].text == ":";
}

}  // namespace

PolytopeComplex parse_complex(std::string_view text) {
    auto lines = lex(text);
    std::string label = "complex";
    std::string initial = "empty";
    SourceLocation initial_at{};

    struct Ref {
        std::string name;
        SourceLocation at;
    };
    struct Object { Ref ref; };
    struct Leq { Ref x, y; };
    struct Pb { Ref x, y, c, z; };
    struct Cov { Ref target; std::vector<Ref> sources; };
    struct Hz { Ref name, src, dst; std::vector<std::pair<Ref, Ref>> slice; };
    std::vector<Object> objects;
    std::vector<Leq> leqs;
    std::vector<Pb> pbs;
    std::vector<Cov> covers;
    std::vector<Hz> hzs;

    std::string section;
    std::set<std::string> seen_sections;
    bool header_done = false;
    for (const Line& l : lines) {
        auto ref = [&](const Token& t) { return Ref{t.text, {l.number, t.column}}; };
        if (!header_done && l.tokens.size() >= 1 && l.tokens[0].kind == Token::Name && l.tokens[0].text == "complex" &&
            !(l.tokens.size() >= 2 && l.tokens[1].text == ":")) {
            header_done = true;
            std::string rest = l.raw.substr(std::string("complex").size());
            auto b = rest.find_first_not_of(" \t");
            if (b == std::string::npos) fail(ErrorCode::SyntaxError, l.number, l.indent + 8, "expected a label after 'complex'");
            label = rest.substr(b);
            continue;
        }
        header_done = true;
        if (l.tokens.size() >= 2 && l.tokens[0].kind == Token::Name && l.tokens[1].text == ":" && l.indent == 0 &&
            (is_header(l) || l.tokens[0].text == "initial")) {
            const std::string& s = l.tokens[0].text;
            if (!kSections.count(s)) fail(ErrorCode::UnknownSection, l.number, l.tokens[0].column, "unknown section '" + s + "'");
            if (!seen_sections.insert(s).second)
                fail(ErrorCode::DuplicateDeclaration, l.number, l.tokens[0].column, "section '" + s + "' appears twice");
            if (s == "initial") {
                Cursor c{l, 2};
                if (!c.at_end()) {
                    const Token& t = c.name();
                    initial = t.text;
                    initial_at = {l.number, t.column};
                    c.done();
                }
            }
            section = s;
            continue;
        }
        if (l.indent == 0 && l.tokens.size() == 2 && l.tokens[1].text == ":")
            fail(ErrorCode::UnknownSection, l.number, l.tokens[0].column, "unknown section '" + l.tokens[0].text + "'");
        Cursor c{l};
        if (section.empty()) fail(ErrorCode::SyntaxError, l.number, c.column(), "expected a section header");
        if (section == "objects") {
            objects.push_back({ref(c.name())});
            while (c.peek(",")) {
                c.expect(",");
                objects.push_back({ref(c.name())});
            }
            c.done();
        } else if (section == "initial") {
            initial = c.name().text;
            initial_at = {l.number, l.tokens[0].column};
            c.done();
        } else if (section == "vertical") {
            Leq e;
            e.x = ref(c.name());
            c.expect("<=");
            e.y = ref(c.name());
            c.done();
            leqs.push_back(e);
        } else if (section == "pullback") {
            Pb p;
            c.expect("(");
            p.x = ref(c.name());
            c.expect(",");
            p.y = ref(c.name());
            c.expect("|");
            p.c = ref(c.name());
            c.expect(")");
            c.expect("=");
            p.z = ref(c.name());
            c.done();
            pbs.push_back(p);
        } else if (section == "covers") {
            Cov v;
            v.target = ref(c.name());
            c.expect("<-");
            c.expect("{");
            if (!c.peek("}")) {
                v.sources.push_back(ref(c.name()));
                while (c.peek(",")) {
                    c.expect(",");
                    v.sources.push_back(ref(c.name()));
                }
            }
            c.expect("}");
            c.done();
            covers.push_back(std::move(v));
        } else if (section == "horizontal") {
            if (!l.tokens.empty() && l.tokens[0].text == "slice" && l.tokens.size() > 1 && l.tokens[1].text == ":") {
                if (hzs.empty()) fail(ErrorCode::SyntaxError, l.number, l.tokens[0].column, "slice line before any horizontal");
                c.i = 2;
                Ref u = ref(c.name());
                c.expect("|->");
                Ref v = ref(c.name());
                c.done();
                hzs.back().slice.emplace_back(u, v);
            } else {
                Hz h;
                h.name = ref(c.name());
                c.expect(":");
                h.src = ref(c.name());
                c.expect("->");
                h.dst = ref(c.name());
                c.done();
                hzs.push_back(std::move(h));
            }
        }
    }

    ComplexBuilder b(label, initial);
    std::map<std::string, PolytopeId> ids{{initial, kInitial}};
    for (const auto& o : objects) {
        if (ids.count(o.ref.name))
            fail(ErrorCode::DuplicateDeclaration, o.ref.at.line, o.ref.at.column, "'" + o.ref.name + "' declared twice");
        ids[o.ref.name] = b.add_object(o.ref.name);
    }
    auto resolve = [&](const Ref& r) {
        auto it = ids.find(r.name);
        if (it == ids.end()) fail(ErrorCode::UnknownObject, r.at.line, r.at.column, "unknown object '" + r.name + "'");
        return it->second;
    };
    auto guarded = [&](const SourceLocation& at, auto&& fn) {
        try {
            fn();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.code(), at, e.what());
        }
    };
    for (const auto& e : leqs) guarded(e.x.at, [&] { b.add_leq(resolve(e.x), resolve(e.y)); });
    for (const auto& v : covers)
        guarded(v.target.at, [&] {
            std::vector<PolytopeId> s;
            for (const auto& r : v.sources) s.push_back(resolve(r));
            b.add_cover(resolve(v.target), s);
        });
    std::set<std::string> hnames;
    for (const auto& h : hzs) {
        if (!hnames.insert(h.name.name).second)
            fail(ErrorCode::DuplicateDeclaration, h.name.at.line, h.name.at.column,
                 "horizontal '" + h.name.name + "' declared twice");
        guarded(h.name.at, [&] {
            SliceMap slice;
            for (const auto& [u, v] : h.slice) slice.emplace_back(resolve(u), resolve(v));
            b.add_horizontal(h.name.name, resolve(h.src), resolve(h.dst), slice);
        });
    }
    for (const auto& p : pbs)
        guarded(p.x.at, [&] { b.declare_pullback(resolve(p.x), resolve(p.y), resolve(p.c), resolve(p.z)); });
    SourceLocation end_at{lines.empty() ? 1 : lines.back().number, 1};
    PolytopeComplex out;
    guarded(end_at, [&] { out = b.build(); });
    (void)initial_at;
    return out;
}

std::string print_complex(const PolytopeComplex& c) {
    std::ostringstream os;
    os << "complex " << c.label() << "\n";
    os << "initial: " << c.name(kInitial) << "\n";
    os << "objects:\n";
    for (PolytopeId x : c.noninitial()) os << "  " << c.name(x) << "\n";
    auto edges = c.hasse_edges();
    if (!edges.empty()) {
        os << "vertical:\n";
        for (const auto& [x, y] : edges) os << "  " << c.name(x) << " <= " << c.name(y) << "\n";
    }
    if (!c.declared_pullbacks().empty()) {
        os << "pullback:\n";
        for (const auto& p : c.declared_pullbacks())
            os << "  (" << c.name(p.x) << "," << c.name(p.y) << "|" << c.name(p.c) << ") = " << c.name(p.z) << "\n";
    }
    if (!c.covering_basis().empty()) {
        os << "covers:\n";
        for (const auto& f : c.covering_basis()) os << "  " << c.name(f.target) << " <- " << family_string(c, f.sources) << "\n";
    }
    if (!c.horizontal_generators().empty()) {
        os << "horizontal:\n";
        for (const auto& h : c.horizontal_generators()) {
            os << "  " << h.name << ": " << c.name(h.src) << " -> " << c.name(h.dst) << "\n";
            for (const auto& [u, v] : h.slice) os << "    slice: " << c.name(u) << " |-> " << c.name(v) << "\n";
        }
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ArgumentOutOfRange, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

PolytopeComplex load_complex(const std::string& path) { return parse_complex(read_file(path)); }

MorphismDocument parse_morphism_document(std::string_view text) {
    auto lines = lex(text);
    MorphismDocument doc;
    bool header = false;
    for (const Line& l : lines) {
        Cursor c{l};
        if (!header) {
            const Token& t = c.name();
            if (t.text != "functor" && t.text != "kleisli")
                fail(ErrorCode::SyntaxError, l.number, t.column, "expected 'functor' or 'kleisli'");
            doc.kleisli = t.text == "kleisli";
            std::string rest = l.raw.substr(t.text.size());
            auto b = rest.find_first_not_of(" \t");
            doc.label = b == std::string::npos ? "" : rest.substr(b);
            header = true;
            continue;
        }
        if (l.tokens.size() >= 2 && l.tokens[1].text == ":" && l.indent == 0 &&
            (l.tokens[0].text == "source" || l.tokens[0].text == "target")) {
            std::string rest = l.raw.substr(l.raw.find(':') + 1);
            auto b = rest.find_first_not_of(" \t");
            std::string v = b == std::string::npos ? "" : rest.substr(b);
            (l.tokens[0].text == "source" ? doc.source : doc.target) = v;
            continue;
        }
        if (l.indent == 0 && l.tokens.size() >= 2 && l.tokens[1].text == ":")
            fail(ErrorCode::UnknownSection, l.number, l.tokens[0].column, "unknown section '" + l.tokens[0].text + "'");
        MorphismLine m;
        const Token& a = c.name();
        m.object = a.text;
        m.where = {l.number, a.column};
        c.expect("|->");
        if (c.peek("{")) {
            c.expect("{");
            if (!c.peek("}")) {
                m.images.push_back(c.name().text);
                while (c.peek(",")) {
                    c.expect(",");
                    m.images.push_back(c.name().text);
                }
            }
            c.expect("}");
        } else {
            m.images.push_back(c.name().text);
        }
        c.done();
        if (!doc.kleisli && m.images.size() != 1)
            fail(ErrorCode::SyntaxError, l.number, a.column, "a functor sends '" + m.object + "' to exactly one object");
        doc.lines.push_back(std::move(m));
    }
    if (!header) fail(ErrorCode::SyntaxError, 1, 1, "empty morphism document");
    return doc;
}

MorphismDocument load_morphism_document(const std::string& path) { return parse_morphism_document(read_file(path)); }

KleisliMorphism resolve_kleisli(const MorphismDocument& doc, const PolytopeComplex& source,
                                const PolytopeComplex& target) {
    std::vector<std::vector<PolytopeId>> images(source.size());
    std::vector<bool> given(source.size(), false);
    for (const auto& m : doc.lines) {
        auto x = source.find(m.object);
        if (!x) fail(ErrorCode::UnknownObject, m.where.line, m.where.column, "unknown source object '" + m.object + "'");
        if (given[x->value])
            fail(ErrorCode::DuplicateDeclaration, m.where.line, m.where.column, "'" + m.object + "' mapped twice");
        given[x->value] = true;
        if (*x == kInitial) {
            if (m.images.size() != 1 || target.find(m.images[0]) != std::optional<PolytopeId>(kInitial))
                fail(ErrorCode::SyntaxError, m.where.line, m.where.column, "the initial object must go to the initial object");
            continue;
        }
        for (const auto& n : m.images) {
            auto y = target.find(n);
            if (!y) fail(ErrorCode::UnknownObject, m.where.line, m.where.column, "unknown target object '" + n + "'");
            if (*y != kInitial) images[x->value].push_back(*y);
        }
    }
    if (!doc.kleisli)
        for (PolytopeId x : source.noninitial())
            if (!given[x.value])
                fail(ErrorCode::SyntaxError, 1, 1, "functor leaves '" + source.name(x) + "' unmapped");
    try {
        return KleisliMorphism(source, target, std::move(images), doc.label);
    } catch (const Error& e) {
        fail(e.code(), doc.lines.empty() ? 1 : doc.lines.front().where.line, 1, e.what());
    }
}

std::string print_morphism(const KleisliMorphism& f, bool as_functor) {
    std::ostringstream os;
    os << (as_functor ? "functor" : "kleisli") << (f.label().empty() ? "" : " " + f.label()) << "\n";
    os << "source: " << f.source().label() << "\n";
    os << "target: " << f.target().label() << "\n";
    for (PolytopeId x : f.source().noninitial()) {
        os << f.source().name(x) << " |-> ";
        if (as_functor && f(x).size() == 1) os << f.target().name(f(x)[0]) << "\n";
        else os << family_string(f.target(), f(x)) << "\n";
    }
    return os.str();
}

}  // namespace polycpx
