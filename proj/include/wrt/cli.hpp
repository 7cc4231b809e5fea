// Command-line front end. Exit codes: 0 ok, 1 bad input or usage,
// 2 verification failure, 3 theorem violation.

#ifndef WRT_CLI_HPP_
#define WRT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace wrt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitTheoremViolation = 3;

// `args` excludes the program name. "-" as a tree path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wrt

#endif  // WRT_CLI_HPP_
