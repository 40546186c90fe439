#ifndef RANK2QI_CLI_HPP_
#define RANK2QI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rank2qi::cli {

enum ExitCode { kOk = 0, kRejected = 1, kUsage = 2 };

/* Default shard count: $RANK2QI_SHARDS if set and positive, else hardware threads. */
unsigned default_shards();

/* args excludes the program name.  JSON results go to out, diagnostics to err. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rank2qi::cli

#endif /* RANK2QI_CLI_HPP_ */
