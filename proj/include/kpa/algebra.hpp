#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kpa/path_calculus.hpp"
#include "kpa/ring.hpp"

namespace kpa {

/// s_mu s_{nu*}; the sources must agree.
struct SpanTerm {
    Path mu;
    Path nu;

    SpanTerm(Path m, Path n) : mu(std::move(m)), nu(std::move(n)) {
        if (mu.source != nu.source) throw EndpointError("span term with mismatched sources");
    }

    /// d(mu) - d(nu).
    std::vector<long long> grade() const {
        std::vector<long long> out(mu.degree.rank());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = static_cast<long long>(mu.degree[i]) - static_cast<long long>(nu.degree[i]);
        return out;
    }

    friend bool operator==(const SpanTerm&, const SpanTerm&) = default;
    friend auto operator<=>(const SpanTerm& a, const SpanTerm& b) {
        if (auto c = a.mu <=> b.mu; c != 0) return c;
        return a.nu <=> b.nu;
    }
};

inline std::string grade_str(const std::vector<long long>& n) {
    std::string s = "(";
    for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    return s + ")";
}

class AlgebraElement {
public:
    using Terms = std::map<SpanTerm, Scalar>;

    AlgebraElement(GraphPtr g, Ring ring) : graph_(std::move(g)), ring_(std::move(ring)) {}

    const GraphPtr& graph_ptr() const noexcept { return graph_; }
    const KGraph& graph() const noexcept { return *graph_; }
    const Ring& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Scalar coefficient(const SpanTerm& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const SpanTerm& t, const Scalar& c) {
        Scalar value = ring_.normalize(c);
        if (value == 0) return;
        auto [it, fresh] = terms_.emplace(t, value);
        if (fresh) return;
        it->second = ring_.add(it->second, value);
        if (it->second == 0) terms_.erase(it);
    }

    AlgebraElement zero_like() const { return AlgebraElement(graph_, ring_); }

    AlgebraElement& operator+=(const AlgebraElement& b) {
        check_compatible(b);
        for (const auto& [t, c] : b.terms_) add_term(t, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& b) {
        check_compatible(b);
        for (const auto& [t, c] : b.terms_) add_term(t, ring_.negate(c));
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(const AlgebraElement& a) { return a.scaled(Scalar(-1)); }

    AlgebraElement scaled(const Scalar& r) const {
        AlgebraElement out = zero_like();
        for (const auto& [t, c] : terms_) out.add_term(t, ring_.multiply(c, ring_.normalize(r)));
        return out;
    }
    friend AlgebraElement operator*(const Scalar& r, const AlgebraElement& a) { return a.scaled(r); }

    /// Bilinear extension of s_mu s_{nu*} s_lambda s_{sigma*} = sum over Lambda^min(nu, lambda).
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_compatible(b);
        const KGraph& g = *a.graph_;
        AlgebraElement out = a.zero_like();
        std::map<std::pair<Path, Path>, std::vector<MinimalPair>> cache;
        for (const auto& [x, cx] : a.terms_)
            for (const auto& [y, cy] : b.terms_) {
                if (x.nu.range != y.mu.range) continue;
                auto key = std::make_pair(x.nu, y.mu);
                auto it = cache.find(key);
                if (it == cache.end()) it = cache.emplace(key, lambda_min(g, x.nu, y.mu)).first;
                if (it->second.empty()) continue;
                const Scalar c = a.ring_.multiply(cx, cy);
                for (const auto& [rho, tau] : it->second)
                    out.add_term(SpanTerm(g.compose(x.mu, rho), g.compose(y.nu, tau)), c);
            }
        return out;
    }
    AlgebraElement& operator*=(const AlgebraElement& b) { return *this = *this * b; }

    AlgebraElement star() const {
        AlgebraElement out = zero_like();
        for (const auto& [t, c] : terms_) out.add_term(SpanTerm(t.nu, t.mu), c);
        return out;
    }

    /// Homogeneous components keyed by d(mu) - d(nu).
    std::map<std::vector<long long>, AlgebraElement> grading_decompose() const {
        std::map<std::vector<long long>, AlgebraElement> out;
        for (const auto& [t, c] : terms_) out.try_emplace(t.grade(), graph_, ring_).first->second.add_term(t, c);
        return out;
    }

    bool is_homogeneous() const { return grading_decompose().size() <= 1; }

    /// Same element with coefficients carried into another ring.
    AlgebraElement in_ring(const Ring& target) const {
        AlgebraElement out(graph_, target);
        for (const auto& [t, c] : terms_) out.add_term(t, c);
        return out;
    }

    /// Parseable text: terms like 2*s(a)*t(b), s(v), -t(e).
    std::string str() const {
        if (terms_.empty()) return "0";
        const KGraph& g = *graph_;
        std::string out;
        for (const auto& [t, c] : terms_) {
            std::string factors;
            if (t.mu.is_vertex() && t.nu.is_vertex()) {
                factors = "s(" + g.path_str(t.mu) + ")";
            } else {
                if (!t.mu.is_vertex()) factors = "s(" + g.path_str(t.mu) + ")";
                if (!t.nu.is_vertex()) factors += (factors.empty() ? "" : "*") + std::string("t(") + g.path_str(t.nu) + ")";
            }
            std::string coeff;
            Scalar mag = c;
            bool negative = c < 0;
            if (negative) mag = -c;
            if (mag != 1) coeff = scalar_str(mag) + "*";
            if (out.empty())
                out = (negative ? "-" : "") + coeff + factors;
            else
                out += (negative ? " - " : " + ") + coeff + factors;
        }
        return out;
    }

    friend bool same_terms(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

private:
    void check_compatible(const AlgebraElement& b) const {
        if (!(ring_ == b.ring_)) throw RingMismatchError("elements over " + ring_.name() + " and " + b.ring_.name());
        if (graph_ != b.graph_) throw Error("elements over different graphs");
    }

    GraphPtr graph_;
    Ring ring_;
    Terms terms_;
};

/// s_lambda, or s_{lambda*} when starred.
inline AlgebraElement generator(const GraphPtr& g, const Path& lambda, bool starred, const Ring& ring) {
    AlgebraElement out(g, ring);
    const Path v = g->vertex_path(lambda.source);
    if (starred)
        out.add_term(SpanTerm(v, lambda), ring.one());
    else
        out.add_term(SpanTerm(lambda, v), ring.one());
    return out;
}

inline AlgebraElement vertex_element(const GraphPtr& g, VertexId v, const Ring& ring) {
    return generator(g, g->vertex_path(v), false, ring);
}

/// s_mu s_{nu*} with coefficient one.
inline AlgebraElement span_element(const GraphPtr& g, const Path& mu, const Path& nu, const Ring& ring) {
    AlgebraElement out(g, ring);
    out.add_term(SpanTerm(mu, nu), ring.one());
    return out;
}

/// s_lambda s_{lambda*}.
inline AlgebraElement range_projection(const GraphPtr& g, const Path& lambda, const Ring& ring) {
    return span_element(g, lambda, lambda, ring);
}

}  // namespace kpa
