#pragma once

#include <string>
#include <vector>

namespace polycpx {

struct Finding {
    std::string kind;
    std::string witness;
};

// Result of a bounded check. Violations are failures; notes are informational.
struct Report {
    std::string title;
    std::vector<Finding> violations;
    std::vector<std::string> notes;
    bool partial = false;
    std::size_t checked = 0;

    bool ok() const { return violations.empty(); }
    void fail(std::string kind, std::string witness) {
        violations.push_back({std::move(kind), std::move(witness)});
    }
    void note(std::string text) { notes.push_back(std::move(text)); }
    void absorb(const Report& other);
};

std::string render_text(const Report& report);

}  // namespace polycpx
