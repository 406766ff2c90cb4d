#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kpa/kgraph.hpp"

namespace kpa {

enum class Format { Text, Structured };

/// Ordered key/value sections. Structured output is flat "section.key: value" lines and never
/// carries timing, so identical inputs give identical bytes.
class Report {
public:
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };

    Report& section(const std::string& name) {
        sections_.push_back({name, {}});
        return *this;
    }

    Report& add(const std::string& key, const std::string& value) {
        if (sections_.empty()) section("result");
        sections_.back().entries.emplace_back(key, value);
        return *this;
    }
    Report& add(const std::string& key, std::size_t value) { return add(key, std::to_string(value)); }
    Report& add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }
    Report& add(const std::string& key, const char* value) { return add(key, std::string(value)); }

    const std::vector<Section>& sections() const noexcept { return sections_; }

    std::optional<std::string> find(const std::string& section, const std::string& key) const {
        for (const auto& s : sections_)
            if (s.name == section)
                for (const auto& [k, v] : s.entries)
                    if (k == key) return v;
        return std::nullopt;
    }

    std::string render(Format f, std::optional<double> millis = {}) const {
        std::ostringstream os;
        if (f == Format::Structured) {
            for (const auto& s : sections_)
                for (const auto& [k, v] : s.entries) os << s.name << '.' << k << ": " << v << '\n';
            return os.str();
        }
        bool first = true;
        for (const auto& s : sections_) {
            if (!first) os << '\n';
            first = false;
            os << s.name << '\n';
            for (const auto& [k, v] : s.entries) os << "  " << k << ": " << v << '\n';
        }
        if (millis) os << "\ntime: " << static_cast<long long>(*millis) << " ms\n";
        return os.str();
    }

private:
    std::vector<Section> sections_;
};

inline void add_graph_summary(Report& r, const KGraph& g) {
    r.section("graph");
    r.add("rank", g.rank());
    r.add("vertices", g.vertex_count());
    r.add("edges", g.edge_count());
    for (std::uint32_t c = 0; c < g.rank(); ++c) r.add("edges.color" + std::to_string(c + 1), g.edges_of_color(c));
    r.add("squares", g.squares().size());
}

}  // namespace kpa
