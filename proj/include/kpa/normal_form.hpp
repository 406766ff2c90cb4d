#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kpa/algebra.hpp"

namespace kpa {

struct PiEClosure {
    std::set<Path> base;
    std::set<Path> closed;
};

/// Least superset of E closed under: lambda, mu of equal degree and source, rho, tau of equal degree and
/// source, (alpha, beta) in Lambda^min(mu, rho) give lambda.alpha and tau.beta.
inline PiEClosure pi_closure(const KGraph& g, const std::set<Path>& E, std::size_t max_paths = 200000) {
    PiEClosure out{E, E};
    std::map<std::pair<Path, Path>, std::vector<MinimalPair>> cache;
    for (;;) {
        std::map<std::pair<DegreeVector, VertexId>, std::vector<Path>> classes;
        for (const auto& p : out.closed) classes[{p.degree, p.source}].push_back(p);
        std::vector<Path> fresh;
        auto add = [&](Path p) {
            if (!out.closed.count(p)) fresh.push_back(std::move(p));
        };
        for (const auto& [k1, c1] : classes)
            for (const auto& [k2, c2] : classes)
                for (const auto& mu : c1)
                    for (const auto& rho : c2) {
                        if (mu.range != rho.range) continue;
                        auto key = std::make_pair(mu, rho);
                        auto it = cache.find(key);
                        if (it == cache.end()) it = cache.emplace(key, lambda_min(g, mu, rho)).first;
                        for (const auto& [alpha, beta] : it->second) {
                            if (!alpha.is_vertex())
                                for (const auto& lambda : c1) add(g.compose(lambda, alpha));
                            if (!beta.is_vertex())
                                for (const auto& tau : c2) add(g.compose(tau, beta));
                        }
                    }
        if (fresh.empty()) return out;
        for (auto& p : fresh) out.closed.insert(std::move(p));
        if (out.closed.size() > max_paths)
            throw ClosureDivergedError("closure exceeded " + std::to_string(max_paths) + " paths");
    }
}

inline PiEClosure pi_closure(const KGraph& g, const std::vector<Path>& E, std::size_t max_paths = 200000) {
    return pi_closure(g, std::set<Path>(E.begin(), E.end()), max_paths);
}

/// {nu : lambda.nu in the closure, d(nu) != 0}.
inline std::vector<Path> closure_extensions(const KGraph& g, const PiEClosure& c, const Path& lambda) {
    std::vector<Path> out;
    for (const auto& k : c.closed)
        if (k.range == lambda.range && k.degree != lambda.degree && lambda.degree.le(k.degree) && g.has_prefix(k, lambda))
            out.push_back(g.factorize(k, lambda.degree).second);
    return out;
}

inline void check_theta_pair(const KGraph& g, const PiEClosure& c, const Path& lambda, const Path& mu) {
    if (!c.closed.count(lambda) || !c.closed.count(mu))
        throw PairError("(" + g.path_str(lambda) + ", " + g.path_str(mu) + ") is not in the closure");
    if (lambda.degree != mu.degree || lambda.source != mu.source)
        throw PairError("(" + g.path_str(lambda) + ", " + g.path_str(mu) + ") differ in degree or source");
}

/// Whether the product defining Theta at lambda is killed by (KP4).
inline ExhaustivenessVerdict theta_vanishing(const KGraph& g, const PiEClosure& c, const Path& lambda) {
    return is_exhaustive(g, lambda.source, closure_extensions(g, c, lambda));
}

/// s_lambda (prod over nu of s_{s(lambda)} - s_nu s_{nu*}) s_{mu*}, without the (KP4) check.
inline AlgebraElement theta_product(const GraphPtr& g, const Ring& ring, const PiEClosure& c, const Path& lambda,
                                    const Path& mu) {
    check_theta_pair(*g, c, lambda, mu);
    AlgebraElement out = generator(g, lambda, false, ring);
    const AlgebraElement v = vertex_element(g, lambda.source, ring);
    for (const auto& nu : closure_extensions(*g, c, lambda)) out *= v - range_projection(g, nu, ring);
    return out * generator(g, mu, true, ring);
}

/// Theta_{lambda, mu}; the zero element when its vanishing is certified.
inline AlgebraElement theta(const GraphPtr& g, const Ring& ring, const PiEClosure& c, const Path& lambda,
                            const Path& mu) {
    check_theta_pair(*g, c, lambda, mu);
    if (theta_vanishing(*g, c, lambda).exhaustive()) return AlgebraElement(g, ring);
    return theta_product(g, ring, c, lambda, mu);
}

/// Homogeneous corner s_alpha X s_{beta*} of a graded component, d(alpha) = n+, d(beta) = n-.
struct BlockKey {
    std::vector<long long> grade;
    Path alpha;
    Path beta;
    friend bool operator==(const BlockKey&, const BlockKey&) = default;
    friend auto operator<=>(const BlockKey& a, const BlockKey& b) {
        if (auto c = a.grade <=> b.grade; c != 0) return c;
        if (auto c = a.alpha <=> b.alpha; c != 0) return c;
        return a.beta <=> b.beta;
    }
};

struct NormalFormBlock {
    BlockKey key;
    PiEClosure closure;
    std::map<std::pair<Path, Path>, Scalar> coords;
};

struct NormalForm {
    std::vector<NormalFormBlock> blocks;
    // Some Theta was dropped on an exhaustiveness verdict that holds only up to the search bound.
    bool unverified = false;

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.coords.empty()) return false;
        return true;
    }

    std::size_t coordinate_count() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.coords.size();
        return n;
    }

    const NormalFormBlock* find(const BlockKey& k) const {
        for (const auto& b : blocks)
            if (b.key == k) return &b;
        return nullptr;
    }
};

namespace detail {

struct SplitTerm {
    BlockKey key;
    Path mu;
    Path nu;
};

inline SplitTerm split_term(const KGraph& g, const SpanTerm& t) {
    const auto n = t.grade();
    DegreeVector plus = DegreeVector::zero(n.size()), minus = DegreeVector::zero(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] > 0) plus[i] = static_cast<std::uint32_t>(n[i]);
        if (n[i] < 0) minus[i] = static_cast<std::uint32_t>(-n[i]);
    }
    auto [alpha, mu] = g.factorize(t.mu, plus);
    auto [beta, nu] = g.factorize(t.nu, minus);
    return {{n, std::move(alpha), std::move(beta)}, std::move(mu), std::move(nu)};
}

}  // namespace detail

/// Theta coordinates of each corner over the closure of its support. Terms in `extra` enlarge the
/// closures without contributing, so two elements can be compared coordinate by coordinate.
inline NormalForm normal_form(const AlgebraElement& a, const std::vector<SpanTerm>& extra = {}) {
    const KGraph& g = a.graph();
    const Ring& ring = a.ring();
    struct Pending {
        std::set<Path> base;
        std::vector<std::pair<detail::SplitTerm, Scalar>> terms;
    };
    std::map<BlockKey, Pending> pending;
    for (const auto& [t, c] : a.terms()) {
        auto s = detail::split_term(g, t);
        auto& p = pending[s.key];
        p.base.insert(s.mu);
        p.base.insert(s.nu);
        p.terms.emplace_back(std::move(s), c);
    }
    for (const auto& t : extra) {
        auto s = detail::split_term(g, t);
        auto& p = pending[s.key];
        p.base.insert(s.mu);
        p.base.insert(s.nu);
    }
    NormalForm out;
    for (auto& [key, p] : pending) {
        NormalFormBlock block{key, pi_closure(g, p.base), {}};
        std::map<Path, ExhaustivenessVerdict> vanishing;
        auto vanishes = [&](const Path& lambda) -> const ExhaustivenessVerdict& {
            auto it = vanishing.find(lambda);
            if (it == vanishing.end()) it = vanishing.emplace(lambda, theta_vanishing(g, block.closure, lambda)).first;
            return it->second;
        };
        for (const auto& [s, c] : p.terms) {
            for (const auto& k : block.closure.closed) {
                if (k.range != s.mu.range || !s.mu.degree.le(k.degree) || !g.has_prefix(k, s.mu)) continue;
                const Path nu = g.factorize(k, s.mu.degree).second;
                const Path partner = g.compose(s.nu, nu);
                const auto& verdict = vanishes(k);
                if (verdict.exhaustive()) continue;
                if (verdict.status == Exhaustiveness::ExhaustiveUpToBound) {
                    out.unverified = true;
                    continue;
                }
                auto [it, fresh] = block.coords.emplace(std::make_pair(k, partner), ring.normalize(c));
                if (!fresh) it->second = ring.add(it->second, c);
                if (it->second == 0) block.coords.erase(it);
            }
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

struct ZeroVerdict {
    bool zero = false;
    bool unverified = false;
};

inline ZeroVerdict zero_test(const AlgebraElement& a) {
    const NormalForm nf = normal_form(a);
    return {nf.is_zero(), nf.unverified};
}

inline bool is_zero(const AlgebraElement& a) { return zero_test(a).zero; }

inline ZeroVerdict equality_test(const AlgebraElement& a, const AlgebraElement& b) { return zero_test(a - b); }

inline bool equal(const AlgebraElement& a, const AlgebraElement& b) { return equality_test(a, b).zero; }

/// Coordinates as text, one corner per line.
inline std::string normal_form_str(const KGraph& g, const NormalForm& nf) {
    std::string out;
    for (const auto& b : nf.blocks) {
        if (b.coords.empty()) continue;
        out += "grade " + grade_str(b.key.grade) + " corner (" + g.path_str(b.key.alpha) + ", " + g.path_str(b.key.beta) + "):";
        for (const auto& [pair, c] : b.coords)
            out += " " + scalar_str(c) + "*Theta(" + g.path_str(pair.first) + ", " + g.path_str(pair.second) + ")";
        out += "\n";
    }
    return out.empty() ? "0\n" : out;
}

}  // namespace kpa
