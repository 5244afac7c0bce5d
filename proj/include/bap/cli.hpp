#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapRefusal = 3;

// Runs one CLI command. args excludes the program name. Subcommands:
//   solve     --method {brute|enum-x|rxoy|ryox|alt|shift|auto} --input FILE [--json]
//   analyze   --input FILE [--average] [--domination] [--profile] [--json]
//   check-lin --input FILE [--tol T] [--json]
//   generate  --kind K --m M --n N --seed S --out FILE [kind params]
//   reduce    --from {qap|tap|disjoint-matchings} --input FILE --out FILE
//             [--alpha A] [--penalty L] [--zero-one]
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bap
