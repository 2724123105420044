// Copyright 2026 The sqstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQSTAT_TOOLS_CLI_COMMANDS_HPP_
#define SQSTAT_TOOLS_CLI_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/format.hpp"
#include "cli/sweep.hpp"
#include "sqstat/closed_form.hpp"
#include "sqstat/fock_oracle.hpp"

namespace sqstat::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

/// r x phi x |alpha| x theta x x = 3 x 2 x 3 x 2 x 3 points used by
/// `verify --grid`.
std::vector<ModeParameters> verification_grid();

int cmd_stats(const ModeParameters& p, StateOrdering which, OutputFormat fmt,
              std::ostream& out, std::ostream& err);

/// Compares closed forms with the converged oracle for both orderings at
/// every point. The oracle convergence tolerance equals rel_tol.
int cmd_verify(const std::vector<ModeParameters>& points, double rel_tol,
               const OracleConfig& oracle, OutputFormat fmt, std::ostream& out,
               std::ostream& err);

int cmd_spectral(const ModeParameters& p,
                 std::optional<double> bath_temperature_kelvin,
                 OutputFormat fmt, std::ostream& out, std::ostream& err);

int cmd_sweep(const SweepSpec& spec, StateOrdering which, OutputFormat fmt,
              bool with_oracle, double rel_tol, const OracleConfig& oracle,
              std::ostream& out, std::ostream& err);

/// Parses a full command line (without the program name) and dispatches.
/// Returns 0 on success, 1 on verification failure, 2 on usage or domain
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sqstat::cli

#endif  // SQSTAT_TOOLS_CLI_COMMANDS_HPP_
