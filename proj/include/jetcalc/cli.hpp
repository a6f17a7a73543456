#ifndef JETCALC_CLI_HPP
#define JETCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jetcalc {

// Run the command-line front end. Exit codes: 0 success (including
// mathematically empty/infeasible results), 1 usage or input parse errors,
// 2 resource caps or truncation-cap insufficiency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jetcalc

#endif
