#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lkq::cli {

// Exit codes: 0 affirmative, 1 negative, 2 usage or parse error,
// 3 oracle and prover disagree.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lkq::cli
