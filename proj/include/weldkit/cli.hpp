#pragma once

#include <ostream>

namespace weldkit {

// Exit status: 0 success, 1 negative verdict, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weldkit
