#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "asymspace/exact.hpp"
#include "asymspace/lp.hpp"

namespace asymspace {

/// Generator budget for double description; ASYMSPACE_DD_BUDGET overrides.
inline int default_dd_budget() {
    static const int value = [] {
        if (const char* env = std::getenv("ASYMSPACE_DD_BUDGET")) {
            int parsed = std::atoi(env);
            if (parsed > 0) return parsed;
        }
        return 10000;
    }();
    return value;
}

/// One half-space <normal, x> <= offset.
struct HrepRow {
    Vec normal;
    Rational offset;
};

/// Generator form: conv(points) + cone(rays). Symmetric ray pairs encode
/// lineality. An empty point list means the empty set.
struct VRep {
    std::vector<Vec> points;
    std::vector<Vec> rays;
};

inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

namespace detail {

struct ConeGenerators {
    std::vector<Vec> rays;      // extreme rays of the pointed part
    std::vector<Vec> lineality; // basis of the lineality space
};

// Extreme rays of a pointed cone {z : N z <= 0}; requires rank(N) == dim.
// Classic incremental double description: start from a simplicial subcone
// picked from independent rows, then cut with the remaining rows, combining
// adjacent positive/negative ray pairs.
inline std::vector<Vec> dd_pointed_cone(const Mat& n_rows, std::size_t dim, int budget) {
    if (dim == 0) return {};
    const std::size_t m = n_rows.rows();

    // independent row subset forming the initial simplicial cone
    std::vector<std::size_t> base;
    Mat acc(0, dim);
    for (std::size_t i = 0; i < m && base.size() < dim; ++i) {
        Mat trial = acc;
        trial.append_row(n_rows.row(i));
        if (rank(trial) > base.size()) {
            acc = std::move(trial);
            base.push_back(i);
        }
    }
    if (base.size() != dim)
        throw std::logic_error("dd_pointed_cone: cone is not pointed");

    Mat basis_mat(0, dim);
    for (auto i : base) basis_mat.append_row(n_rows.row(i));
    Mat neg_inv = inverse(basis_mat);

    struct RayRec {
        Vec dir;
        std::vector<char> tight; // indexed by original row
    };
    std::vector<RayRec> rays;
    std::vector<char> processed(m, 0);
    for (auto i : base) processed[i] = 1;

    for (std::size_t j = 0; j < dim; ++j) {
        Vec dir(dim);
        for (std::size_t i = 0; i < dim; ++i) dir[i] = -neg_inv.at(i, j);
        RayRec rec{primitive_direction(dir), std::vector<char>(m, 0)};
        for (std::size_t k = 0; k < dim; ++k)
            if (k != j) rec.tight[base[k]] = 1;
        rays.push_back(std::move(rec));
    }

    for (std::size_t c = 0; c < m; ++c) {
        if (processed[c]) continue;
        processed[c] = 1;
        const Vec& cut = n_rows.row(c);

        std::vector<Rational> slack(rays.size());
        std::vector<std::size_t> plus, minus;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            slack[i] = dot(cut, rays[i].dir);
            if (slack[i] > 0) plus.push_back(i);
            else if (slack[i] < 0) minus.push_back(i);
            else rays[i].tight[c] = 1;
        }
        if (plus.empty()) continue;

        std::vector<RayRec> created;
        for (auto u : plus) {
            for (auto v : minus) {
                std::vector<char> common(m, 0);
                std::size_t count = 0;
                for (std::size_t k = 0; k < m; ++k) {
                    common[k] = rays[u].tight[k] && rays[v].tight[k];
                    count += common[k];
                }
                if (count + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t w = 0; w < rays.size() && adjacent; ++w) {
                    if (w == u || w == v) continue;
                    bool covers = true;
                    for (std::size_t k = 0; k < m && covers; ++k)
                        if (common[k] && !rays[w].tight[k]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                Vec dir = slack[u] * rays[v].dir - slack[v] * rays[u].dir;
                RayRec rec{primitive_direction(dir), std::move(common)};
                rec.tight[c] = 1;
                created.push_back(std::move(rec));
            }
        }

        std::vector<RayRec> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (slack[i] <= 0) next.push_back(std::move(rays[i]));
        for (auto& r : created) next.push_back(std::move(r));
        rays = std::move(next);
        if (rays.size() > static_cast<std::size_t>(budget))
            throw dd_budget_exceeded("double description exceeded the generator budget (" +
                                     std::to_string(budget) + " generators, dimension " +
                                     std::to_string(dim) + ")");
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.dir));
    return out;
}

// Generators of {y : M y <= 0}: lineality basis plus extreme rays of the
// pointed quotient C ∩ lin(C)^⊥.
inline ConeGenerators cone_generators(const Mat& m_rows, std::size_t dim, int budget) {
    ConeGenerators out;
    Subspace lin = m_rows.rows() == 0 ? Subspace::full(dim) : null_space(m_rows, dim);
    out.lineality = lin.basis();
    std::size_t pointed_dim = dim - lin.dim();
    if (pointed_dim == 0) return out;

    if (lin.dim() == 0) {
        out.rays = dd_pointed_cone(m_rows, dim, budget);
        return out;
    }

    Subspace w = orthogonal_complement(lin);
    Mat w_cols(dim, pointed_dim); // columns = basis of lin^⊥
    for (std::size_t j = 0; j < pointed_dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) w_cols.at(i, j) = w.basis()[j][i];

    Mat reduced(m_rows.rows(), pointed_dim);
    for (std::size_t i = 0; i < m_rows.rows(); ++i)
        for (std::size_t j = 0; j < pointed_dim; ++j)
            reduced.at(i, j) = dot(m_rows.row(i), Vec([&] {
                                       std::vector<Rational> col(dim);
                                       for (std::size_t k = 0; k < dim; ++k) col[k] = w_cols.at(k, j);
                                       return col;
                                   }()));

    for (const Vec& z : dd_pointed_cone(reduced, pointed_dim, budget)) {
        Vec y(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < pointed_dim; ++j) y[i] += w_cols.at(i, j) * z[j];
        out.rays.push_back(primitive_direction(y));
    }
    return out;
}

} // namespace detail

/// A rational polyhedron carrying one or both representations. Values are
/// immutable; dd_convert returns a completed copy.
class Polyhedron {
public:
    static Polyhedron from_hrep(std::size_t dim, std::vector<HrepRow> rows) {
        for (const auto& r : rows)
            if (r.normal.size() != dim) throw dimension_mismatch("hrep row dimension mismatch");
        Polyhedron p(dim);
        p.hrep_ = std::move(rows);
        return p;
    }

    static Polyhedron from_vrep(std::size_t dim, std::vector<Vec> points, std::vector<Vec> rays) {
        for (const auto& v : points)
            if (v.size() != dim) throw dimension_mismatch("vrep point dimension mismatch");
        for (const auto& v : rays)
            if (v.size() != dim) throw dimension_mismatch("vrep ray dimension mismatch");
        Polyhedron p(dim);
        p.vrep_ = VRep{std::move(points), std::move(rays)};
        return p;
    }

    static Polyhedron empty_set(std::size_t dim) {
        Polyhedron p(dim);
        p.hrep_ = std::vector<HrepRow>{HrepRow{Vec(dim), Rational(-1)}};
        p.vrep_ = VRep{};
        return p;
    }

    std::size_t dimension() const { return dim_; }
    bool has_hrep() const { return hrep_.has_value(); }
    bool has_vrep() const { return vrep_.has_value(); }
    const std::vector<HrepRow>& hrep() const {
        if (!hrep_) throw std::logic_error("polyhedron has no hrep; call dd_convert");
        return *hrep_;
    }
    const VRep& vrep() const {
        if (!vrep_) throw std::logic_error("polyhedron has no vrep; call dd_convert");
        return *vrep_;
    }

    bool is_empty() const {
        if (vrep_) return vrep_->points.empty();
        LinearProgram p = LinearProgram::minimize(Vec(dim_));
        for (const auto& r : *hrep_) p.subject_to_leq(r.normal, r.offset);
        return solve_lp(p).is_infeasible();
    }

    bool contains_point(const Vec& x) const {
        if (x.size() != dim_) throw dimension_mismatch("point dimension mismatch");
        if (hrep_) {
            for (const auto& r : *hrep_)
                if (dot(r.normal, x) > r.offset) return false;
            return true;
        }
        return vrep_member(x);
    }

    /// Intersection of two hrep polyhedra (row concatenation).
    friend Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
        if (a.dim_ != b.dim_) throw dimension_mismatch("intersection dimension mismatch");
        std::vector<HrepRow> rows = a.hrep();
        const auto& brows = b.hrep();
        rows.insert(rows.end(), brows.begin(), brows.end());
        return from_hrep(a.dim_, std::move(rows));
    }

private:
    explicit Polyhedron(std::size_t dim) : dim_(dim) {}

    bool vrep_member(const Vec& x) const {
        const auto& v = *vrep_;
        if (v.points.empty()) return false;
        // feasibility of x = sum mu_i p_i + sum nu_j r_j, mu >= 0, sum mu = 1, nu >= 0
        std::size_t k = v.points.size(), l = v.rays.size();
        LinearProgram p = LinearProgram::minimize(Vec(k + l));
        for (std::size_t d = 0; d < dim_; ++d) {
            Vec row(k + l);
            for (std::size_t i = 0; i < k; ++i) row[i] = v.points[i][d];
            for (std::size_t j = 0; j < l; ++j) row[k + j] = v.rays[j][d];
            p.subject_to_eq(std::move(row), x[d]);
        }
        Vec ones(k + l);
        for (std::size_t i = 0; i < k; ++i) ones[i] = 1;
        p.subject_to_eq(std::move(ones), Rational(1));
        for (std::size_t i = 0; i < k + l; ++i) {
            Vec row(k + l);
            row[i] = -1;
            p.subject_to_leq(std::move(row), Rational(0));
        }
        return solve_lp(p).is_optimal();
    }

    std::size_t dim_;
    std::optional<std::vector<HrepRow>> hrep_;
    std::optional<VRep> vrep_;

    friend Polyhedron dd_convert(const Polyhedron&, int);
    friend class PolyhedronBuilder;
};

namespace detail {

inline bool cone_member(const Vec& x, const std::vector<Vec>& gens) {
    if (x.is_zero()) return true;
    if (gens.empty()) return false;
    std::size_t l = gens.size(), dim = x.size();
    LinearProgram p = LinearProgram::minimize(Vec(l));
    for (std::size_t d = 0; d < dim; ++d) {
        Vec row(l);
        for (std::size_t j = 0; j < l; ++j) row[j] = gens[j][d];
        p.subject_to_eq(std::move(row), x[d]);
    }
    for (std::size_t i = 0; i < l; ++i) {
        Vec row(l);
        row[i] = -1;
        p.subject_to_leq(std::move(row), Rational(0));
    }
    return solve_lp(p).is_optimal();
}

inline bool vrep_set_member(const Vec& x, const VRep& v) {
    if (v.points.empty()) return false;
    std::size_t k = v.points.size(), l = v.rays.size(), dim = x.size();
    LinearProgram p = LinearProgram::minimize(Vec(k + l));
    for (std::size_t d = 0; d < dim; ++d) {
        Vec row(k + l);
        for (std::size_t i = 0; i < k; ++i) row[i] = v.points[i][d];
        for (std::size_t j = 0; j < l; ++j) row[k + j] = v.rays[j][d];
        p.subject_to_eq(std::move(row), x[d]);
    }
    Vec ones(k + l);
    for (std::size_t i = 0; i < k; ++i) ones[i] = 1;
    p.subject_to_eq(std::move(ones), Rational(1));
    for (std::size_t i = 0; i < k + l; ++i) {
        Vec row(k + l);
        row[i] = -1;
        p.subject_to_leq(std::move(row), Rational(0));
    }
    return solve_lp(p).is_optimal();
}

/// LP-based irredundancy pass over a generator description.
inline VRep eliminate_redundant(VRep v) {
    for (std::size_t i = 0; i < v.rays.size();) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < v.rays.size(); ++j)
            if (j != i) others.push_back(v.rays[j]);
        if (cone_member(v.rays[i], others)) v.rays.erase(v.rays.begin() + i);
        else ++i;
    }
    for (std::size_t i = 0; i < v.points.size();) {
        if (v.points.size() == 1) break;
        VRep rest;
        for (std::size_t j = 0; j < v.points.size(); ++j)
            if (j != i) rest.points.push_back(v.points[j]);
        rest.rays = v.rays;
        if (vrep_set_member(v.points[i], rest)) v.points.erase(v.points.begin() + i);
        else ++i;
    }
    std::sort(v.points.begin(), v.points.end(), lex_less);
    std::sort(v.rays.begin(), v.rays.end(), lex_less);
    return v;
}

inline VRep hrep_to_vrep(std::size_t dim, const std::vector<HrepRow>& rows, int budget) {
    // homogenize: {(x,t) : <a,x> - b t <= 0, -t <= 0}
    Mat cone_rows(0, dim + 1);
    for (const auto& r : rows) {
        Vec row(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) row[i] = r.normal[i];
        row[dim] = -r.offset;
        cone_rows.append_row(std::move(row));
    }
    {
        Vec row(dim + 1);
        row[dim] = -1;
        cone_rows.append_row(std::move(row));
    }
    ConeGenerators gens = cone_generators(cone_rows, dim + 1, budget);

    VRep v;
    auto dehomogenize = [&](const Vec& g) {
        Vec x(dim);
        for (std::size_t i = 0; i < dim; ++i) x[i] = g[i];
        if (g[dim] > 0) {
            Rational inv = Rational(1) / g[dim];
            for (std::size_t i = 0; i < dim; ++i) x[i] *= inv;
            v.points.push_back(std::move(x));
        } else {
            v.rays.push_back(primitive_direction(x));
        }
    };
    for (const auto& g : gens.rays) dehomogenize(g);
    for (const auto& l : gens.lineality) {
        // lineality of the homogenized cone always has t = 0
        Vec x(dim);
        for (std::size_t i = 0; i < dim; ++i) x[i] = l[i];
        v.rays.push_back(primitive_direction(x));
        v.rays.push_back(primitive_direction(-x));
    }
    if (v.points.empty()) return VRep{}; // empty set
    return eliminate_redundant(std::move(v));
}

inline HrepRow normalize_row(Vec normal, Rational offset) {
    Vec combined(normal.size() + 1);
    for (std::size_t i = 0; i < normal.size(); ++i) combined[i] = normal[i];
    combined[normal.size()] = offset;
    combined = primitive_direction(combined);
    Vec n(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) n[i] = combined[i];
    return HrepRow{std::move(n), combined[normal.size()]};
}

inline std::vector<HrepRow> vrep_to_hrep(std::size_t dim, const VRep& v, int budget) {
    if (v.points.empty()) {
        return {HrepRow{Vec(dim), Rational(-1)}};
    }
    // polar of the homogenized generator cone
    Mat polar_rows(0, dim + 1);
    for (const auto& p : v.points) {
        Vec row(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) row[i] = p[i];
        row[dim] = 1;
        polar_rows.append_row(std::move(row));
    }
    for (const auto& r : v.rays) {
        Vec row(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) row[i] = r[i];
        polar_rows.append_row(std::move(row));
    }
    ConeGenerators gens = cone_generators(polar_rows, dim + 1, budget);

    std::vector<HrepRow> rows;
    auto emit = [&](const Vec& g) {
        Vec a(dim);
        bool zero = true;
        for (std::size_t i = 0; i < dim; ++i) {
            a[i] = g[i];
            if (a[i] != 0) zero = false;
        }
        if (zero && g[dim] == 0) return;
        rows.push_back(normalize_row(std::move(a), -g[dim]));
    };
    for (const auto& g : gens.rays) emit(g);
    for (const auto& l : gens.lineality) {
        emit(l);
        emit(-l);
    }
    std::sort(rows.begin(), rows.end(), [](const HrepRow& x, const HrepRow& y) {
        if (x.normal != y.normal) return lex_less(x.normal, y.normal);
        return x.offset < y.offset;
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const HrepRow& x, const HrepRow& y) {
                               return x.normal == y.normal && x.offset == y.offset;
                           }),
               rows.end());
    return rows;
}

} // namespace detail

/// Completes the missing representation and verifies the two agree:
/// every generator satisfies every row, and each facet of the regenerated
/// hrep is valid over the source hrep (checked by LP).
inline Polyhedron dd_convert(const Polyhedron& p, int budget = default_dd_budget()) {
    if (p.has_hrep() && p.has_vrep()) return p;
    Polyhedron out = p;
    if (p.has_hrep()) {
        VRep v = detail::hrep_to_vrep(p.dimension(), p.hrep(), budget);
        for (const auto& row : p.hrep()) {
            for (const auto& pt : v.points)
                if (dot(row.normal, pt) > row.offset)
                    throw std::logic_error("dd_convert: generated point violates a source row");
            for (const auto& ray : v.rays)
                if (dot(row.normal, ray) > 0)
                    throw std::logic_error("dd_convert: generated ray escapes a source row");
        }
        if (!v.points.empty()) {
            auto back = detail::vrep_to_hrep(p.dimension(), v, budget);
            for (const auto& row : back) {
                LinearProgram prog = LinearProgram::minimize(row.normal);
                for (const auto& src : p.hrep()) prog.subject_to_leq(src.normal, src.offset);
                LpOutcome sup = solve_lp_max(std::move(prog));
                if (!sup.is_optimal() || sup.value > row.offset)
                    throw std::logic_error("dd_convert: source set is not contained in the conversion");
            }
        }
        out.vrep_ = std::move(v);
    } else {
        std::vector<HrepRow> rows = detail::vrep_to_hrep(p.dimension(), p.vrep(), budget);
        for (const auto& row : rows) {
            for (const auto& pt : p.vrep().points)
                if (dot(row.normal, pt) > row.offset)
                    throw std::logic_error("dd_convert: source point violates a generated row");
            for (const auto& ray : p.vrep().rays)
                if (dot(row.normal, ray) > 0)
                    throw std::logic_error("dd_convert: source ray escapes a generated row");
        }
        out.hrep_ = std::move(rows);
    }
    return out;
}

/// Recession cone of a nonempty polyhedron: {Ax <= 0} in hrep form, or the
/// cone of the stored rays for generator form.
inline Polyhedron recession_cone(const Polyhedron& p) {
    if (p.is_empty()) throw std::invalid_argument("recession cone of an empty polyhedron");
    if (p.has_hrep()) {
        std::vector<HrepRow> rows;
        for (const auto& r : p.hrep()) rows.push_back(HrepRow{r.normal, Rational(0)});
        return Polyhedron::from_hrep(p.dimension(), std::move(rows));
    }
    return Polyhedron::from_vrep(p.dimension(), {Vec(p.dimension())}, p.vrep().rays);
}

/// outer ⊇ inner, decided exactly. With a generator form of inner the rows
/// are checked directly; otherwise each outer row is maximized over inner by
/// LP and an unbounded positive direction refutes containment.
inline bool polyhedron_contains(const Polyhedron& outer, const Polyhedron& inner) {
    if (outer.dimension() != inner.dimension())
        throw dimension_mismatch("containment dimension mismatch");
    const auto& rows = outer.has_hrep() ? outer.hrep() : dd_convert(outer).hrep();
    if (inner.has_vrep()) {
        const VRep& v = inner.vrep();
        for (const auto& row : rows) {
            for (const auto& pt : v.points)
                if (dot(row.normal, pt) > row.offset) return false;
            for (const auto& ray : v.rays)
                if (dot(row.normal, ray) > 0) return false;
        }
        return true;
    }
    for (const auto& row : rows) {
        LinearProgram prog = LinearProgram::minimize(row.normal);
        for (const auto& src : inner.hrep()) prog.subject_to_leq(src.normal, src.offset);
        LpOutcome sup = solve_lp_max(std::move(prog));
        if (sup.is_unbounded()) return false;
        if (sup.is_optimal() && sup.value > row.offset) return false;
    }
    return true;
}

} // namespace asymspace
