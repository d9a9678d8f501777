//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/Commands.hh
//! \brief Subcommands of the malmheden tool.
//---------------------------------------------------------------------------//
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "json.hpp"

namespace malmheden::tool
{
//---------------------------------------------------------------------------//
//! Exit codes
enum ExitCode : int
{
    exit_success = 0,
    exit_config = 2,
    exit_numerical = 3,
    exit_selftest = 4,
};

//! Tool version string
char const* version();

/*!
 * Merged run configuration: JSON file values overridden by flags.
 *
 * Keys use underscores where flags use dashes. Every value read, including
 * defaults, is recorded in \c effective() for the output metadata.
 */
class Config
{
  public:
    Config(nlohmann::json raw, std::initializer_list<char const*> allowed);

    bool has(std::string const& key) const;
    //! Required value; throws config_error naming the flag
    nlohmann::json const& require(std::string const& key);
    //! Value or a default
    nlohmann::json value_or(std::string const& key, nlohmann::json fallback);
    //! Value without echoing it (thread count, output path)
    nlohmann::json silent_or(std::string const& key, nlohmann::json fallback) const;

    nlohmann::json const& effective() const { return effective_; }

  private:
    nlohmann::json raw_;
    nlohmann::json effective_ = nlohmann::json::object();
};

//! Read a JSON config file; throws config_error
nlohmann::json load_config_file(std::string const& path);

//! Join "--opt -0.5" into "--opt=-0.5" so negative values are not options
std::vector<std::string> join_negative_values(std::vector<std::string> args);

int cmd_solve(nlohmann::json const& config);
int cmd_measure(nlohmann::json const& config);
int cmd_hermite(nlohmann::json const& config);
int cmd_brownian(nlohmann::json const& config);
int cmd_selftest(nlohmann::json const& config);

}  // namespace malmheden::tool
