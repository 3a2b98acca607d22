#pragma once

#include <ostream>

namespace snclab {

/// Command-line entry point. Exit codes: 0 success or predicate true,
/// 1 predicate false or failed check, 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace snclab
