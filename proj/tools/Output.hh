//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/Output.hh
//! \brief CSV and JSON tables with a reproducibility header.
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace malmheden::tool
{
//---------------------------------------------------------------------------//
//! One table cell: text, integer or real
using Cell = std::variant<std::string, long long, double>;

//! Real numbers with 17 significant digits
std::string format_real(double value);

/*!
 * Rows of cells under fixed column names.
 *
 * The metadata (tool version, command, effective config, seed) is written as
 * '#' comment lines in CSV and as a "metadata" object in JSON.
 */
class Table
{
  public:
    Table(std::vector<std::string> columns, nlohmann::json metadata);

    void add_row(std::vector<Cell> row);

    std::vector<std::string> const& columns() const { return columns_; }
    std::vector<std::vector<Cell>> const& rows() const { return rows_; }

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;

  private:
    std::vector<std::string> columns_;
    nlohmann::json metadata_;
    std::vector<std::vector<Cell>> rows_;
};

//! Write to \c path ("-" for stdout) in "csv" or "json" format
void write_table(Table const& table, std::string const& path, std::string const& format);

}  // namespace malmheden::tool
