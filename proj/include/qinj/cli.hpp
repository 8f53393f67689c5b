#ifndef QINJ_CLI_HPP
#define QINJ_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qinj/classify.hpp"

namespace qinj {

// Exit codes of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitParse = 2,
  kExitNotIntervalFinite = 3,
  kExitUnknownId = 4,
  kExitInfiniteDimension = 5,
};

// Plain text report, one fact per line, sections in fixed order.
std::string render_catalog(const QuiverDescription& q, const InjectiveCatalog& catalog);

// Differential comparison of the symbolic answers on q against the
// brute-force oracle. Writes one line per check; returns the mismatch count.
std::size_t oracle_compare(const QuiverDescription& q, Index window, std::uint64_t seed, std::ostream& out);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qinj

#endif  // QINJ_CLI_HPP
