#include "polycpx/report.hpp"

#include <sstream>

namespace polycpx {

void Report::absorb(const Report& other) {
    for (const auto& v : other.violations) violations.push_back(v);
    for (const auto& n : other.notes) notes.push_back(n);
    partial = partial || other.partial;
    checked += other.checked;
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << report.title << ": " << (report.ok() ? "pass" : "FAIL");
    if (report.partial) out << " (partial)";
    out << " [" << report.checked << " checked]\n";
    for (const auto& v : report.violations) out << "  violation: " << v.kind << " -- " << v.witness << "\n";
    for (const auto& n : report.notes) out << "  note: " << n << "\n";
    return out.str();
}

}  // namespace polycpx
