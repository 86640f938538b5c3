#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "asymspace/exact.hpp"

namespace asymspace {

/// Minimization program over free (sign-unrestricted) variables:
///   minimize <objective, x>
///   subject to <a, x> <= b for each inequality row
///              <a, x> =  b for each equality row.
struct LinearProgram {
    std::size_t num_vars = 0;
    Vec objective;
    std::vector<std::pair<Vec, Rational>> leq;
    std::vector<std::pair<Vec, Rational>> eq;

    static LinearProgram minimize(Vec obj) {
        LinearProgram p;
        p.num_vars = obj.size();
        p.objective = std::move(obj);
        return p;
    }

    LinearProgram& subject_to_leq(Vec a, Rational b) {
        check_row(a);
        leq.emplace_back(std::move(a), std::move(b));
        return *this;
    }

    LinearProgram& subject_to_eq(Vec a, Rational b) {
        check_row(a);
        eq.emplace_back(std::move(a), std::move(b));
        return *this;
    }

private:
    void check_row(const Vec& a) const {
        if (a.size() != num_vars) throw dimension_mismatch("LP row has wrong variable count");
    }
};

struct LpOutcome {
    enum class Kind { optimal, infeasible, unbounded };

    Kind kind = Kind::infeasible;
    Rational value;  // meaningful for optimal only
    Vec witness;     // meaningful for optimal only

    bool is_optimal() const { return kind == Kind::optimal; }
    bool is_infeasible() const { return kind == Kind::infeasible; }
    bool is_unbounded() const { return kind == Kind::unbounded; }

    static LpOutcome optimal(Rational v, Vec w) { return {Kind::optimal, std::move(v), std::move(w)}; }
    static LpOutcome infeasible() { return {Kind::infeasible, Rational(0), Vec()}; }
    static LpOutcome unbounded() { return {Kind::unbounded, Rational(0), Vec()}; }
};

namespace detail {

// Dense two-phase simplex tableau. Free variables are split x = u - w;
// Bland's smallest-index rule is used for both the entering and the leaving
// choice, so the iteration cannot cycle.
class SimplexTableau {
public:
    explicit SimplexTableau(const LinearProgram& p) {
        n_ = p.num_vars;
        num_slack_ = p.leq.size();
        m_ = p.leq.size() + p.eq.size();
        num_struct_ = 2 * n_ + num_slack_;
        cols_ = num_struct_ + m_ + 1; // + artificials + rhs
        rhs_ = cols_ - 1;
        rows_.assign(m_ + 2, std::vector<Rational>(cols_, Rational(0)));
        basis_.assign(m_, 0);

        std::size_t r = 0;
        for (const auto& [a, b] : p.leq) {
            fill_structural(r, a);
            rows_[r][2 * n_ + r] = 1; // slack
            rows_[r][rhs_] = b;
            ++r;
        }
        for (const auto& [a, b] : p.eq) {
            fill_structural(r, a);
            rows_[r][rhs_] = b;
            ++r;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (rows_[i][rhs_] < 0)
                for (auto& c : rows_[i]) c = -c;
            basis_[i] = num_struct_ + i;
            rows_[i][num_struct_ + i] = 1;
        }
        // phase-2 reduced costs (artificials cost 0, so no reduction needed)
        for (std::size_t j = 0; j < n_; ++j) {
            rows_[m_][j] = p.objective[j];
            rows_[m_][n_ + j] = -p.objective[j];
        }
        // phase-1 reduced costs: cost 1 on artificials, reduce by the basis
        for (std::size_t j = 0; j < cols_; ++j) {
            Rational s = 0;
            for (std::size_t i = 0; i < m_; ++i) s += rows_[i][j];
            if (j < num_struct_) rows_[m_ + 1][j] = -s;
            if (j == rhs_) rows_[m_ + 1][j] = -s;
        }
    }

    LpOutcome run(const LinearProgram& p) {
        if (!iterate(m_ + 1)) throw std::logic_error("phase 1 unbounded");
        if (rows_[m_ + 1][rhs_] != 0) return LpOutcome::infeasible();
        expel_artificials();
        if (!iterate(m_)) return LpOutcome::unbounded();

        Vec x(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            std::size_t b = basis_[i];
            if (b < n_) x[b] += rows_[i][rhs_];
            else if (b < 2 * n_) x[b - n_] -= rows_[i][rhs_];
        }
        Rational value = dot(p.objective, x);
        verify(p, x, value);
        return LpOutcome::optimal(std::move(value), std::move(x));
    }

private:
    void fill_structural(std::size_t r, const Vec& a) {
        for (std::size_t j = 0; j < n_; ++j) {
            rows_[r][j] = a[j];
            rows_[r][n_ + j] = -a[j];
        }
    }

    // one simplex phase driven by the given objective row; false = unbounded
    bool iterate(std::size_t obj_row) {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < num_struct_; ++j) {
                if (rows_[obj_row][j] < 0) { enter = j; break; } // Bland
            }
            if (enter == cols_) return true;
            std::size_t leave = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                if (leave == m_) { leave = i; continue; }
                Rational cur = rows_[i][rhs_] / rows_[i][enter];
                Rational best = rows_[leave][rhs_] / rows_[leave][enter];
                if (cur < best || (cur == best && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = Rational(1) / rows_[r][c];
        for (auto& v : rows_[r]) v *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            Rational f = rows_[i][c];
            for (std::size_t j = 0; j < cols_; ++j) rows_[i][j] -= f * rows_[r][j];
        }
        basis_[r] = c;
    }

    // After a feasible phase 1, pivot leftover artificial basics onto any
    // structural column; rows with none are redundant and stay inert.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < num_struct_) continue;
            for (std::size_t j = 0; j < num_struct_; ++j) {
                if (rows_[i][j] != 0) { pivot(i, j); break; }
            }
        }
    }

    void verify(const LinearProgram& p, const Vec& x, const Rational& value) const {
        for (const auto& [a, b] : p.leq)
            if (dot(a, x) > b) throw std::logic_error("simplex witness violates an inequality");
        for (const auto& [a, b] : p.eq)
            if (dot(a, x) != b) throw std::logic_error("simplex witness violates an equality");
        Rational tableau_value = -rows_[m_][rhs_];
        if (value != tableau_value) throw std::logic_error("simplex value mismatch");
    }

    std::size_t n_ = 0, m_ = 0, num_slack_ = 0, num_struct_ = 0, cols_ = 0, rhs_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

/// Exact simplex. Terminates on every well-formed input.
inline LpOutcome solve_lp(const LinearProgram& p) {
    if (p.num_vars == 0) throw dimension_mismatch("LP needs at least one variable");
    return detail::SimplexTableau(p).run(p);
}

/// sup { <objective, x> : constraints of p } encoded as -min(-objective).
/// The objective stored in p is ignored.
inline LpOutcome solve_lp_max(LinearProgram p) {
    p.objective = -p.objective;
    LpOutcome out = solve_lp(p);
    if (out.is_optimal()) out.value = -out.value;
    return out;
}

} // namespace asymspace
