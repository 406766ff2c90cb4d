#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kpa/errors.hpp"

namespace kpa {

/// An element of N^k with the componentwise partial order.
///
/// operator<=> is a total (lexicographic) order used only for stable sorting;
/// the lattice order is `le`.
class DegreeVector {
public:
    DegreeVector() = default;
    explicit DegreeVector(std::size_t rank) : entries_(rank, 0) {}
    DegreeVector(std::initializer_list<std::uint32_t> entries) : entries_(entries) {}
    explicit DegreeVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {}

    static DegreeVector zero(std::size_t rank) { return DegreeVector(rank); }
    static DegreeVector unit(std::size_t rank, std::size_t color) {
        DegreeVector d(rank);
        d.entries_.at(color) = 1;
        return d;
    }
    static DegreeVector filled(std::size_t rank, std::uint32_t value) {
        return DegreeVector(std::vector<std::uint32_t>(rank, value));
    }

    std::size_t rank() const noexcept { return entries_.size(); }
    std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
    std::uint32_t& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    std::uint64_t total() const noexcept {
        std::uint64_t t = 0;
        for (auto e : entries_) t += e;
        return t;
    }
    bool is_zero() const noexcept {
        return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
    }

    bool le(const DegreeVector& other) const {
        check_rank(other);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] > other.entries_[i]) return false;
        return true;
    }

    DegreeVector join(const DegreeVector& other) const {
        check_rank(other);
        DegreeVector out(*this);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = std::max(entries_[i], other.entries_[i]);
        return out;
    }
    DegreeVector meet(const DegreeVector& other) const {
        check_rank(other);
        DegreeVector out(*this);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = std::min(entries_[i], other.entries_[i]);
        return out;
    }

    DegreeVector& operator+=(const DegreeVector& other) {
        check_rank(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
        return *this;
    }
    friend DegreeVector operator+(DegreeVector a, const DegreeVector& b) { return a += b; }

    /// Defined only when other <= *this.
    DegreeVector operator-(const DegreeVector& other) const {
        if (!other.le(*this))
            throw DegreeError("cannot subtract " + other.str() + " from " + str());
        DegreeVector out(*this);
        for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
        return out;
    }

    /// Componentwise max(this - other, 0).
    DegreeVector monus(const DegreeVector& other) const {
        check_rank(other);
        DegreeVector out(*this);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = entries_[i] > other.entries_[i] ? entries_[i] - other.entries_[i] : 0;
        return out;
    }

    DegreeVector scaled(std::uint32_t factor) const {
        DegreeVector out(*this);
        for (auto& e : out.entries_) e *= factor;
        return out;
    }

    friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
    friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
        os << ')';
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const DegreeVector& d) { return os << d.str(); }

private:
    void check_rank(const DegreeVector& other) const {
        if (other.entries_.size() != entries_.size())
            throw DegreeError("rank mismatch: " + str() + " vs " + other.str());
    }

    std::vector<std::uint32_t> entries_;
};

/// Every n <= bound, in order of total degree then lexicographic.
inline std::vector<DegreeVector> degrees_up_to(const DegreeVector& bound) {
    std::vector<DegreeVector> out;
    DegreeVector cur(bound.rank());
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < bound.rank(); ++i) {
            if (cur[i] < bound[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
        }
        if (i == bound.rank()) break;
    }
    std::stable_sort(out.begin(), out.end(), [](const DegreeVector& a, const DegreeVector& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a < b;
    });
    return out;
}

/// Parses "1,2,3" or "(1,2,3)".
inline DegreeVector parse_degree(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s.push_back(c);
    std::vector<std::uint32_t> entries;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty degree component in '" + text + "'");
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad degree component '" + item + "'");
        }
        if (pos != item.size()) throw ParseError("bad degree component '" + item + "'");
        entries.push_back(static_cast<std::uint32_t>(v));
    }
    if (entries.empty()) throw ParseError("empty degree '" + text + "'");
    return DegreeVector(std::move(entries));
}

}  // namespace kpa
