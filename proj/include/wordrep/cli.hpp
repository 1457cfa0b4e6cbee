// SPDX-License-Identifier: Apache-2.0
//
// The wordrep command line, kept in the library so that it can be driven
// from tests with string streams.
//
//   wordrep classify [FILE...] [--verify] [--witness] [--json]
//   wordrep census N [--filter all|connected|split] [--expected K] [--verify] [--allow-large]
//   wordrep generate TAG [PARAM...] [--orientation]
//   wordrep orient [FILE...] [--all | --count] [--fix-clique] [--classify-types] [--json]
//
// Graphs are read as graph6, one per line, from the files or standard input.
// Blank lines and a leading ">>graph6<<" header are skipped.

#ifndef WORDREP_CLI_HPP
#define WORDREP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wordrep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitDisagreement = 3;

/// Environment variable that lifts the census order guard when set to a
/// non-empty value other than "0".
inline constexpr const char* kAllowLargeEnv = "WORDREP_ALLOW_LARGE";

/// args excludes the program name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace wordrep

#endif  // WORDREP_CLI_HPP
