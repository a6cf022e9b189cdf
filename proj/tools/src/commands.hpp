#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lct::cli {

/// Executes one tool invocation. Reads the input document from the file
/// argument (or the stream when absent or "-"), writes one document to the
/// output stream. Exit codes: 0 success, 2 parse or spec error, 3 input not
/// in the cone.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lct::cli
