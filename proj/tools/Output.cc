//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/Output.cc
//---------------------------------------------------------------------------//
#include "Output.hh"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "malmheden/Types.hh"

namespace malmheden::tool
{
namespace
{
std::string csv_field(std::string const& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char c : text)
    {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string cell_text(Cell const& cell)
{
    if (auto const* s = std::get_if<std::string>(&cell))
        return *s;
    if (auto const* i = std::get_if<long long>(&cell))
        return std::to_string(*i);
    return format_real(std::get<double>(cell));
}

// JSON number text with 17 digits; non-finite values become null
std::string json_cell(Cell const& cell)
{
    if (auto const* s = std::get_if<std::string>(&cell))
        return nlohmann::json(*s).dump();
    if (auto const* i = std::get_if<long long>(&cell))
        return std::to_string(*i);
    double v = std::get<double>(cell);
    if (!std::isfinite(v))
        return "null";
    return format_real(v);
}

// Tool, command, config and seed first, then anything else
std::vector<std::string> metadata_keys(nlohmann::json const& metadata)
{
    std::vector<std::string> keys;
    for (char const* k : {"tool", "command", "config", "seed"})
        if (metadata.contains(k))
            keys.push_back(k);
    for (auto const& item : metadata.items())
        if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
            keys.push_back(item.key());
    return keys;
}

}  // namespace

//---------------------------------------------------------------------------//
std::string format_real(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value == 0 ? 0.0 : value);
    return buffer;
}

Table::Table(std::vector<std::string> columns, nlohmann::json metadata)
    : columns_(std::move(columns)), metadata_(std::move(metadata))
{
}

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns_.size())
        throw Error(ErrorCode::bad_parameter, "row width does not match the columns");
    rows_.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const
{
    for (auto const& key : metadata_keys(metadata_))
    {
        auto const& value = metadata_[key];
        os << "# " << key << ": "
           << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    for (std::size_t i = 0; i < columns_.size(); ++i)
        os << (i ? "," : "") << csv_field(columns_[i]);
    os << '\n';
    for (auto const& row : rows_)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_field(cell_text(row[i]));
        os << '\n';
    }
}

void Table::write_json(std::ostream& os) const
{
    os << "{\n  \"metadata\": {";
    bool first = true;
    for (auto const& key : metadata_keys(metadata_))
    {
        os << (first ? "" : ", ") << nlohmann::json(key).dump() << ": "
           << metadata_[key].dump();
        first = false;
    }
    os << "},\n  \"columns\": "
       << nlohmann::json(columns_).dump() << ",\n  \"rows\": [";
    for (std::size_t r = 0; r < rows_.size(); ++r)
    {
        os << (r ? ",\n    {" : "\n    {");
        for (std::size_t i = 0; i < columns_.size(); ++i)
        {
            os << (i ? ", " : "") << nlohmann::json(columns_[i]).dump() << ": "
               << json_cell(rows_[r][i]);
        }
        os << '}';
    }
    os << (rows_.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

//---------------------------------------------------------------------------//
void write_table(Table const& table, std::string const& path, std::string const& format)
{
    auto emit = [&](std::ostream& os) {
        if (format == "json")
            table.write_json(os);
        else
            table.write_csv(os);
    };
    if (path.empty() || path == "-")
    {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::config_error, "cannot open output file '" + path + "'");
    emit(out);
    if (!out)
        throw Error(ErrorCode::config_error, "failed writing '" + path + "'");
}

}  // namespace malmheden::tool
