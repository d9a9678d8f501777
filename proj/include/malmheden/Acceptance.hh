//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Acceptance.hh
//! \brief Acceptance suite shared by the selftest command and ctest.
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * One sub-check of a criterion: an observed value compared with a bound.
 *
 * With \c upper set the check passes when value <= bound, otherwise when
 * value > bound.
 */
struct CheckPart
{
    std::string label;
    double value{0};
    double bound{0};
    bool upper{true};

    bool passed() const { return upper ? value <= bound : value > bound; }
};

struct CriterionResult
{
    int id{0};
    std::string name;
    std::vector<CheckPart> parts;
    double seconds{0};
    std::string error;

    bool passed() const;
    //! Part with the largest value/bound ratio (upper bounds) or first failure
    CheckPart const* worst() const;
};

struct SuiteReport
{
    std::vector<CriterionResult> results;
    double seconds{0};

    bool passed() const;
};

//! Number of acceptance criteria
inline constexpr int criterion_count = 15;

//! Criteria run by the quick suite (plus the timing criterion)
std::vector<int> quick_criteria();

//! Short title of a criterion
std::string criterion_name(int id);

//! Run one criterion (1 to 14); exceptions become a failed result
CriterionResult run_criterion(int id);

/*!
 * Run the quick or full suite.
 *
 * The timing criterion is appended last: the quick subset must finish in
 * under 60 s and, for the full suite, everything in under 600 s.
 */
SuiteReport run_suite(bool full);

//! Frozen chord-average residual on the 1.5 x 1 ellipse for x^2 - y^2 at (0.5, 0)
inline constexpr double ellipse_regression_residual = 0.26666666666666661;

}  // namespace malmheden
