// Subcommand implementations, kept separate from argv handling so the
// test suite can drive them directly.
#ifndef PATHALG_COMMANDS_HPP
#define PATHALG_COMMANDS_HPP

#include "pathalg/experiment.hpp"
#include "pathalg/io.hpp"

namespace pathalg {

// Exit-code contract: 0 success, 2 parse error, 3 precondition violation,
// 4 inconclusive verdict under --strict.
int exit_code_for(const Error& e);

Json cmd_gb(const AlgebraInput& input, int max_degree);
Json cmd_mon(const AlgebraInput& input, int max_degree);
Json cmd_ap(const AlgebraInput& input, int max_degree, int max_n);
Json cmd_resolve(const AlgebraInput& input, int max_degree, int max_n);
Json cmd_oracle(const AlgebraInput& input, int max_degree, int max_n);
KoszulReport cmd_report(const AlgebraInput& input, const ClassifyBounds& bounds);

// True when any top-level verdict is inconclusive (drives --strict).
bool report_inconclusive(const KoszulReport& report);

}  // namespace pathalg

#endif
