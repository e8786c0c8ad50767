// SPDX-License-Identifier: Apache-2.0
//
// lislink: link-level simulation of large-intelligent-surface uplinks
// Copyright (C) 2026 The lislink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "lislink/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lis::lp
{

void LinearProgram::add(std::vector<double> coeffs, Sense sense, double rhs)
{
    if (coeffs.size() != num_vars)
        throw std::invalid_argument("constraint width does not match the number of variables");
    constraints.push_back({std::move(coeffs), sense, rhs});
}

std::string to_string(Status status)
{
    switch (status)
    {
    case Status::optimal:
        return "optimal";
    case Status::infeasible:
        return "infeasible";
    case Status::unbounded:
        return "unbounded";
    case Status::pivot_limit:
        return "pivot_limit";
    }
    return "unknown";
}

namespace
{

class Tableau
{
  public:
    Tableau(const LinearProgram &lp, const Options &opt) : opt_(opt), n_(lp.num_vars), m_(lp.constraints.size())
    {
        flipped_.assign(m_, false);
        std::vector<Sense> sense(m_);
        for (std::size_t i = 0; i < m_; ++i)
        {
            sense[i] = lp.constraints[i].sense;
            if (lp.constraints[i].rhs < 0.0)
            {
                flipped_[i] = true;
                if (sense[i] == Sense::less_equal)
                    sense[i] = Sense::greater_equal;
                else if (sense[i] == Sense::greater_equal)
                    sense[i] = Sense::less_equal;
            }
        }

        // Column layout: originals | slack or surplus per inequality | artificial per =/>= row.
        std::size_t col = n_;
        slack_col_.assign(m_, npos);
        art_col_.assign(m_, npos);
        for (std::size_t i = 0; i < m_; ++i)
            if (sense[i] != Sense::equal)
                slack_col_[i] = col++;
        art_begin_ = col;
        for (std::size_t i = 0; i < m_; ++i)
            if (sense[i] != Sense::less_equal)
                art_col_[i] = col++;
        width_ = col;

        a_.assign(m_ * (width_ + 1), 0.0);
        basis_.assign(m_, npos);
        for (std::size_t i = 0; i < m_; ++i)
        {
            const double s = flipped_[i] ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n_; ++j)
                at(i, j) = s * lp.constraints[i].coeffs[j];
            rhs(i) = s * lp.constraints[i].rhs;
            if (slack_col_[i] != npos)
                at(i, slack_col_[i]) = sense[i] == Sense::less_equal ? 1.0 : -1.0;
            if (art_col_[i] != npos)
                at(i, art_col_[i]) = 1.0;
            basis_[i] = sense[i] == Sense::less_equal ? slack_col_[i] : art_col_[i];
        }
        obj_.assign(width_ + 1, 0.0);
        in_basis_.assign(width_, false);
        for (std::size_t b : basis_)
            in_basis_[b] = true;
    }

    Solution run(const std::vector<double> &c)
    {
        Solution sol;
        // Phase 1: maximize -sum(artificials).
        if (art_begin_ < width_)
        {
            std::vector<double> phase1(width_, 0.0);
            for (std::size_t j = art_begin_; j < width_; ++j)
                phase1[j] = -1.0;
            set_objective(phase1);
            const Status st = iterate(width_, sol.pivots);
            if (st == Status::pivot_limit)
            {
                sol.status = st;
                return sol;
            }
            double infeasibility = 0.0;
            double scale = 1.0;
            for (std::size_t i = 0; i < m_; ++i)
            {
                scale = std::max(scale, std::fabs(rhs(i)));
                if (basis_[i] >= art_begin_)
                    infeasibility += rhs(i);
            }
            if (infeasibility > opt_.tolerance * scale * 10.0)
            {
                sol.status = Status::infeasible;
                return sol;
            }
            drive_out_artificials();
        }

        // Phase 2 on the original objective; artificial columns never re-enter.
        std::vector<double> phase2(width_, 0.0);
        for (std::size_t j = 0; j < n_; ++j)
            phase2[j] = c[j];
        set_objective(phase2);
        const Status st = iterate(art_begin_, sol.pivots);
        sol.status = st;
        if (st != Status::optimal)
            return sol;

        sol.x.assign(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                sol.x[basis_[i]] = std::max(0.0, rhs(i));
        sol.objective = 0.0;
        for (std::size_t j = 0; j < n_; ++j)
            sol.objective += c[j] * sol.x[j];

        // y = c_B B^{-1}: read off the reduced costs of each row's initial basic column.
        sol.duals.assign(m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i)
        {
            const std::size_t init = art_col_[i] != npos ? art_col_[i] : slack_col_[i];
            const double y = obj_[init];
            sol.duals[i] = flipped_[i] ? -y : y;
        }
        return sol;
    }

  private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    double &at(std::size_t i, std::size_t j) { return a_[i * (width_ + 1) + j]; }
    double &rhs(std::size_t i) { return a_[i * (width_ + 1) + width_]; }

    // obj_[j] = c_B B^{-1} A_j - c_j; obj_[width_] = current objective value.
    void set_objective(const std::vector<double> &c)
    {
        cost_ = c;
        for (std::size_t j = 0; j <= width_; ++j)
        {
            double z = 0.0;
            for (std::size_t i = 0; i < m_; ++i)
                z += cost_[basis_[i]] * a_[i * (width_ + 1) + j];
            obj_[j] = j < width_ ? z - cost_[j] : z;
        }
    }

    Status iterate(std::size_t entering_limit, std::size_t &pivots)
    {
        std::size_t degenerate_run = 0;
        for (;;)
        {
            const bool bland = opt_.pricing == Pricing::bland || degenerate_run >= opt_.degenerate_switch;
            std::size_t enter = npos;
            double steepest = -opt_.tolerance;
            for (std::size_t j = 0; j < entering_limit; ++j)
            {
                if (obj_[j] < steepest && !is_basic(j))
                {
                    enter = j;
                    if (bland)
                        break;
                    steepest = obj_[j];
                }
            }
            if (enter == npos)
                return Status::optimal;

            std::size_t leave = npos;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m_; ++i)
            {
                const double aij = at(i, enter);
                if (aij <= opt_.tolerance)
                    continue;
                const double ratio = std::max(0.0, rhs(i)) / aij;
                if (ratio < best - opt_.tolerance ||
                    (leave != npos && std::fabs(ratio - best) <= opt_.tolerance && basis_[i] < basis_[leave]))
                {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == npos)
                return Status::unbounded;
            if (++pivots > opt_.max_pivots)
                return Status::pivot_limit;
            // Once Bland's rule takes over it stays for the rest of the phase.
            if (best <= opt_.tolerance || degenerate_run >= opt_.degenerate_switch)
                ++degenerate_run;
            else
                degenerate_run = 0;
            pivot(leave, enter);
        }
    }

    bool is_basic(std::size_t j) const { return in_basis_[j]; }

    void pivot(std::size_t row, std::size_t col)
    {
        const std::size_t w = width_ + 1;
        double *pr = &a_[row * w];
        const double inv = 1.0 / pr[col];
        for (std::size_t j = 0; j < w; ++j)
            pr[j] *= inv;
        pr[col] = 1.0;
        for (std::size_t i = 0; i < m_; ++i)
        {
            if (i == row)
                continue;
            double *ri = &a_[i * w];
            const double f = ri[col];
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j < w; ++j)
                ri[j] -= f * pr[j];
            ri[col] = 0.0;
        }
        const double f = obj_[col];
        if (f != 0.0)
        {
            for (std::size_t j = 0; j < w; ++j)
                obj_[j] -= f * pr[j];
            obj_[col] = 0.0;
        }
        in_basis_[basis_[row]] = false;
        in_basis_[col] = true;
        basis_[row] = col;
    }

    // Zero-valued artificials left in the basis are swapped for any structural or
    // slack column with a usable pivot; rows with none are redundant and keep theirs.
    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < m_; ++i)
        {
            if (basis_[i] < art_begin_)
                continue;
            for (std::size_t j = 0; j < art_begin_; ++j)
            {
                if (!is_basic(j) && std::fabs(at(i, j)) > opt_.tolerance)
                {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    Options opt_;
    std::size_t n_, m_;
    std::size_t width_ = 0;
    std::size_t art_begin_ = 0;
    std::vector<double> a_;
    std::vector<double> obj_;
    std::vector<double> cost_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> slack_col_, art_col_;
    std::vector<bool> flipped_;
    std::vector<bool> in_basis_;
};

} // namespace

Solution solve(const LinearProgram &program, const Options &options)
{
    if (program.objective.size() != program.num_vars)
        throw std::invalid_argument("objective width does not match the number of variables");
    for (const auto &c : program.constraints)
        if (c.coeffs.size() != program.num_vars)
            throw std::invalid_argument("constraint width does not match the number of variables");
    Tableau tableau(program, options);
    return tableau.run(program.objective);
}

} // namespace lis::lp
