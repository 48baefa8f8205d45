#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qlsmodcat {

/// Exit codes: 0 success, 1 invalid input, 2 a verification sweep failed.
enum ExitCode { kExitOk = 0, kExitInvalid = 1, kExitVerification = 2 };

/// Runs one subcommand (validate, build-hopf, build-lifting, build-algebra,
/// classify, transport, verify); args exclude the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

/// Parses "0,1,-1/2,z4^1" (z<L>^<k> is zeta_L^k).
std::vector<class CycloNumber> parse_sample(const std::string& text);

}  // namespace qlsmodcat
