#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kpa/cycles.hpp"
#include "kpa/graph_algo.hpp"
#include "kpa/normal_form.hpp"
#include "kpa/structure.hpp"

namespace kpa {

struct RelationReport {
    std::size_t checks = 0;
    std::vector<std::string> violations;
    bool unverified = false;
    bool passed() const { return violations.empty(); }
};

namespace detail {

inline void expect_zero(RelationReport& r, const AlgebraElement& a, const std::string& label) {
    ++r.checks;
    if (a.empty()) return;
    auto z = zero_test(a);
    r.unverified = r.unverified || z.unverified;
    if (!z.zero) r.violations.push_back(label);
}

}  // namespace detail

/// (KP1)-(KP4) checked through normal-form zero tests on paths of degree at most `cap`.
inline RelationReport verify_kp_relations(const GraphPtr& gp, const Ring& ring, const DegreeVector& cap) {
    const KGraph& g = *gp;
    RelationReport r;
    auto s = [&](const Path& p) { return generator(gp, p, false, ring); };
    auto t = [&](const Path& p) { return generator(gp, p, true, ring); };
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w = 0; w < g.vertex_count(); ++w) {
            auto sv = vertex_element(gp, v, ring), sw = vertex_element(gp, w, ring);
            detail::expect_zero(r, sv * sw - (v == w ? sv : AlgebraElement(gp, ring)),
                                "KP1 " + g.vertex_name(v) + " " + g.vertex_name(w));
        }
    std::vector<Path> paths;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (auto& p : g.paths_up_to(v, cap)) paths.push_back(std::move(p));
    for (const auto& lam : paths)
        for (const auto& mu : paths) {
            const std::string pair = g.path_str(lam) + " " + g.path_str(mu);
            if (lam.source == mu.range && (lam.degree + mu.degree).le(cap)) {
                const Path lm = g.compose(lam, mu);
                detail::expect_zero(r, s(lam) * s(mu) - s(lm), "KP2 " + pair);
                detail::expect_zero(r, t(mu) * t(lam) - t(lm), "KP2* " + pair);
            }
            AlgebraElement rhs(gp, ring);
            for (const auto& [alpha, beta] : lambda_min(g, lam, mu)) rhs += span_element(gp, alpha, beta, ring);
            detail::expect_zero(r, t(lam) * s(mu) - rhs, "KP3 " + pair);
        }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::set<std::vector<Path>> families;
        for (const auto& n : degrees_up_to(cap)) {
            if (n.is_zero()) continue;
            auto E = le_paths(g, v, n);
            if (E.empty() || (E.size() == 1 && E[0].is_vertex())) continue;
            families.insert(std::move(E));
        }
        for (const auto& E : families) {
            if (!is_exhaustive(g, v, E).exhaustive()) continue;
            AlgebraElement prod = vertex_element(gp, v, ring);
            std::string label = "KP4 " + g.vertex_name(v) + " {";
            for (const auto& mu : E) {
                prod *= vertex_element(gp, v, ring) - range_projection(gp, mu, ring);
                label += " " + g.path_str(mu);
            }
            detail::expect_zero(r, prod, label + " }");
        }
    }
    return r;
}

/// s_lambda to t_lambda on the quotient graph, zero on paths with source in H.
class QuotientFamily {
public:
    QuotientFamily(GraphPtr source, const VertexSet& H, const DegreeVector& cap, const std::vector<Path>& initial_cycles)
        : source_(std::move(source)), H_(H),
          target_(std::make_shared<const KGraph>(quotient_graph(*source_, H, cap, initial_cycles))) {}

    const GraphPtr& target() const noexcept { return target_; }
    const VertexSet& removed() const noexcept { return H_; }

    std::optional<Path> map_path(const Path& p) const {
        if (H_.count(p.source)) return std::nullopt;
        if (p.is_vertex()) return target_->vertex_path(*target_->find_vertex(source_->vertex_name(p.range)));
        std::vector<EdgeId> word;
        for (EdgeId e : p.word) word.push_back(*target_->find_edge(source_->edge(e).name));
        return target_->path_from_word(word);
    }

    AlgebraElement operator()(const AlgebraElement& a) const {
        AlgebraElement out(target_, a.ring());
        for (const auto& [t, c] : a.terms()) {
            auto mu = map_path(t.mu);
            if (!mu) continue;
            out.add_term(SpanTerm(*mu, *map_path(t.nu)), c);
        }
        return out;
    }

private:
    GraphPtr source_;
    VertexSet H_;
    GraphPtr target_;
};

inline QuotientFamily quotient_family(const GraphPtr& g, const VertexSet& H, const DegreeVector& cap,
                                      const std::vector<Path>& initial_cycles) {
    return QuotientFamily(g, H, cap, initial_cycles);
}

/// Membership in the ideal generated by {s_v : v in H}.
class IdealMembership {
public:
    IdealMembership(GraphPtr g, const VertexSet& H, const DegreeVector& cap, const std::vector<Path>& initial_cycles)
        : graph_(std::move(g)), hereditary_(hereditary_closure(*graph_, H)) {
        auto sat = saturated_closure(*graph_, hereditary_, cap, initial_cycles);
        members_ = sat.closure;
        if (sat.exact && is_certified_saturated_hereditary(*graph_, sat.closure, cap, initial_cycles))
            quotient_.emplace(graph_, sat.closure, cap, initial_cycles);
    }

    /// Yes: every corner coordinate sits over the saturated closure. No: the quotient map detects it.
    Tri contains(const AlgebraElement& a) const {
        auto inside = [&](const NormalForm& nf) {
            if (nf.unverified) return false;
            for (const auto& b : nf.blocks)
                for (const auto& [pr, c] : b.coords)
                    if (!members_.count(pr.first.source)) return false;
            return true;
        };
        if (inside(normal_form(a))) return Tri::Yes;
        if (quotient_) {
            auto z = zero_test((*quotient_)(a));
            if (!z.zero && !z.unverified) return Tri::No;
        }
        return Tri::Unknown;
    }

    const VertexSet& hereditary() const noexcept { return hereditary_; }
    bool has_quotient() const noexcept { return quotient_.has_value(); }

private:
    GraphPtr graph_;
    VertexSet hereditary_;
    // Each saturation step adds s_v = sum of s_mu s_mu* over a certified exhaustive family, so I_H
    // already contains the vertices of the saturated closure.
    VertexSet members_;
    std::optional<QuotientFamily> quotient_;
};

inline IdealMembership ideal_IH_span(const GraphPtr& g, const VertexSet& H, const DegreeVector& cap,
                                     const std::vector<Path>& initial_cycles) {
    return IdealMembership(g, H, cap, initial_cycles);
}

/// {v : s_v in I_H} as decided by the two membership certificates; nullopt when one is undecided.
inline std::optional<VertexSet> vertices_of_ideal(const GraphPtr& g, const IdealMembership& ideal, const Ring& ring) {
    VertexSet out;
    for (VertexId v = 0; v < g->vertex_count(); ++v) {
        Tri m = ideal.contains(vertex_element(g, v, ring));
        if (m == Tri::Unknown) return std::nullopt;
        if (m == Tri::Yes) out.insert(v);
    }
    return out;
}

/// Coefficients reduced into the integers mod m.
inline AlgebraElement scalar_quotient(const AlgebraElement& a, const Integer& m) {
    if (a.ring().kind() != Ring::Kind::Integers) throw RingMismatchError("reduction needs integer coefficients, got " + a.ring().name());
    return a.in_ring(Ring::integers_mod(m));
}

inline NormalForm scalar_quotient(const NormalForm& nf, const Integer& m) {
    const Ring target = Ring::integers_mod(m);
    NormalForm out = nf;
    for (auto& b : out.blocks) {
        decltype(b.coords) reduced;
        for (const auto& [pr, c] : b.coords)
            if (Scalar r = target.normalize(c); r != 0) reduced.emplace(pr, r);
        b.coords = std::move(reduced);
    }
    return out;
}

inline std::vector<SpanTerm> support(const AlgebraElement& a) {
    std::vector<SpanTerm> out;
    for (const auto& [t, c] : a.terms()) out.push_back(t);
    return out;
}

/// Nonzero coordinates agree corner by corner.
inline bool same_coordinates(const NormalForm& x, const NormalForm& y) {
    auto coords = [](const NormalForm& nf) {
        std::map<BlockKey, std::map<std::pair<Path, Path>, Scalar>> out;
        for (const auto& b : nf.blocks)
            if (!b.coords.empty()) out[b.key] = b.coords;
        return out;
    };
    return coords(x) == coords(y);
}

struct CycleComparison {
    bool below = false;        // s_mu s_mu* <= s_nu s_nu*
    bool equal = false;        // s_mu s_mu* = s_nu s_nu*
    bool has_entrance = false;
    bool unverified = false;
    bool passed() const { return below && (has_entrance ? !equal : equal); }
};

inline CycleComparison generalized_cycle_comparison(const GraphPtr& g, const Ring& ring, const GeneralizedCycle& c) {
    CycleComparison out;
    const auto pm = range_projection(g, c.mu, ring), pn = range_projection(g, c.nu, ring);
    auto left = equality_test(pm * pn, pm), right = equality_test(pn * pm, pm), same = equality_test(pm, pn);
    out.below = left.zero && right.zero;
    out.equal = same.zero;
    out.has_entrance = c.entrance.has_value();
    out.unverified = left.unverified || right.unverified || same.unverified;
    return out;
}

struct IsometryReport {
    AlgebraElement x;
    std::vector<AlgebraElement> isometries;
    std::size_t products_checked = 0;
    bool x_isometry = false;
    bool entrance_orthogonal = false;
    bool products_ok = false;
    bool unverified = false;
    bool passed() const { return x_isometry && entrance_orthogonal && products_ok; }
};

/// p_i = x^i s_tau with x = s_{nu*} s_mu; checks p_i* p_j = delta_ij s_{s(tau)} for i, j <= count.
inline IsometryReport entrance_isometries(const GraphPtr& g, const Ring& ring, const GeneralizedCycle& c,
                                          std::size_t count) {
    if (!c.entrance) throw NoEntranceError("(" + g->path_str(c.mu) + ", " + g->path_str(c.nu) + ") has no entrance");
    const Path& tau = *c.entrance;
    IsometryReport out{generator(g, c.nu, true, ring) * generator(g, c.mu, false, ring), {}, 0, false, false, false, false};
    auto check = [&](const AlgebraElement& a, const AlgebraElement& b) {
        auto z = equality_test(a, b);
        out.unverified = out.unverified || z.unverified;
        return z.zero;
    };
    const AlgebraElement zero(g, ring);
    out.x_isometry = check(out.x.star() * out.x, vertex_element(g, c.mu.source, ring));
    const auto st = generator(g, tau, false, ring);
    out.entrance_orthogonal = check(out.x.star() * st, zero) && check(st.star() * out.x, zero);
    AlgebraElement power = out.x;
    for (std::size_t i = 1; i <= count; ++i) {
        out.isometries.push_back(power * st);
        power *= out.x;
    }
    out.products_ok = true;
    const auto unit = vertex_element(g, tau.source, ring);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            ++out.products_checked;
            if (!check(out.isometries[i].star() * out.isometries[j], i == j ? unit : zero)) out.products_ok = false;
        }
    return out;
}

/// Lambda v, all paths with source v; SizeLimitError when infinite or above `limit`.
inline std::vector<Path> paths_with_source(const KGraph& g, VertexId v, std::size_t limit = 256) {
    std::vector<Path> out;
    const std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
    for (const auto& d : degrees_up_to(DegreeVector::filled(g.rank(), n))) {
        for (auto& p : g.paths_of_degree(d, std::nullopt, v)) {
            if (d.total() >= n) throw SizeLimitError("infinitely many paths end at " + g.vertex_name(v));
            out.push_back(std::move(p));
        }
        if (out.size() > limit) throw SizeLimitError("more than " + std::to_string(limit) + " paths end at " + g.vertex_name(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct MatrixUnitReport {
    VertexId vertex = 0;
    std::vector<Path> paths;
    std::size_t products_checked = 0;
    bool verified = false;
    bool unverified = false;
    std::size_t size() const { return paths.size(); }
};

/// theta_{mu,nu} = s_mu s_{nu*} over Lambda v for a vertex receiving no edges.
inline MatrixUnitReport matrix_unit_ideal(const GraphPtr& g, const Ring& ring, VertexId v) {
    if (g->receives_any(v)) throw NotASinkError(g->vertex_name(v) + " receives edges");
    MatrixUnitReport out;
    out.vertex = v;
    out.paths = paths_with_source(*g, v);
    out.verified = true;
    for (const auto& mu : out.paths)
        for (const auto& nu : out.paths) {
            const auto a = span_element(g, mu, nu, ring);
            for (const auto& lam : out.paths)
                for (const auto& ga : out.paths) {
                    ++out.products_checked;
                    const auto expected = nu == lam ? span_element(g, mu, ga, ring) : AlgebraElement(g, ring);
                    auto z = equality_test(a * span_element(g, lam, ga, ring), expected);
                    out.unverified = out.unverified || z.unverified;
                    if (!z.zero) out.verified = false;
                }
        }
    return out;
}

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// The action of KP_R on the free module over the boundary paths of an acyclic graph: the paths whose
/// source receives no edges.
class BoundaryRepresentation {
public:
    BoundaryRepresentation(GraphPtr g, Ring ring) : graph_(std::move(g)), ring_(std::move(ring)) {
        const KGraph& k = *graph_;
        if (!is_acyclic(k)) throw NotAcyclicError("boundary representation needs an acyclic graph");
        for (VertexId v = 0; v < k.vertex_count(); ++v) {
            if (k.receives_any(v)) continue;
            for (auto& p : paths_with_source(k, v, 4096)) basis_.push_back(std::move(p));
        }
        std::sort(basis_.begin(), basis_.end());
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }

    const std::vector<Path>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    ScalarMatrix zero_matrix() const { return ScalarMatrix(basis_.size(), std::vector<Scalar>(basis_.size(), Scalar(0))); }

    ScalarMatrix operator()(const AlgebraElement& a) const {
        const KGraph& k = *graph_;
        ScalarMatrix m = zero_matrix();
        for (const auto& [t, c] : a.terms())
            for (std::size_t col = 0; col < basis_.size(); ++col) {
                const Path& x = basis_[col];
                if (!k.has_prefix(x, t.nu)) continue;
                const Path rest = k.factorize(x, t.nu.degree).second;
                const std::size_t row = index_.at(k.compose(t.mu, rest));
                m[row][col] = ring_.add(m[row][col], c);
            }
        return m;
    }

    ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) const {
        ScalarMatrix out = zero_matrix();
        const std::size_t n = basis_.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (b[l][j] != 0) out[i][j] = ring_.add(out[i][j], ring_.multiply(a[i][l], b[l][j]));
            }
        return out;
    }

    static bool is_zero(const ScalarMatrix& m) {
        for (const auto& row : m)
            for (const auto& x : row)
                if (x != 0) return false;
        return true;
    }

private:
    GraphPtr graph_;
    Ring ring_;
    std::vector<Path> basis_;
    std::map<Path, std::size_t> index_;
};

inline BoundaryRepresentation boundary_representation(const GraphPtr& g, const Ring& ring) {
    return BoundaryRepresentation(g, ring);
}

}  // namespace kpa
