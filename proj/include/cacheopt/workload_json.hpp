#ifndef CACHEOPT_WORKLOAD_JSON_HPP
#define CACHEOPT_WORKLOAD_JSON_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "cacheopt/model.hpp"

// Workload ingestion from the JSON document format:
//   {"free_memory": <int>, "files": [{"name": <string>,
//    "size_blocks": <int>, "scan_count": <int>}, ...]}

namespace cacheopt {

// Raised for malformed documents: JSON syntax errors (diagnostic carries
// line and column) and schema violations (diagnostic names the field).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

// Parses and validates a workload document. `source` names the input in
// diagnostics. A budget below the file count is not a parse error; it
// surfaces later as BudgetTooSmallError from whatever consumes the
// workload.
Workload parse_workload_text(std::string_view text, std::string_view source = "<input>");

// Reads the file and delegates to parse_workload_text; unreadable files
// raise ParseError.
Workload load_workload_file(const std::string& path);

}  // namespace cacheopt

#endif
