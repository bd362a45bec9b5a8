#pragma once

#include <string>
#include <vector>

namespace phopf {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Flat pass/fail transcript used by every verification suite.
struct CheckReport {
    std::vector<CheckLine> lines;

    void add(std::string name, bool pass, std::string detail = "") {
        lines.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const CheckReport& o, const std::string& prefix = "") {
        for (const auto& l : o.lines) lines.push_back({prefix + l.name, l.pass, l.detail});
    }
    bool ok() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::string str() const {
        std::string out;
        for (const auto& l : lines) {
            out += l.pass ? "[pass] " : "[FAIL] ";
            out += l.name;
            if (!l.detail.empty()) {
                out += "  -- ";
                out += l.detail;
            }
            out += "\n";
        }
        return out;
    }
};

}  // namespace phopf
