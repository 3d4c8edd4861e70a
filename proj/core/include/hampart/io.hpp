// Line-oriented text format for partitions.
//
//   hampart partition v1
//   n 7
//   component 0
//   rep 1000000
//   parity 1110100
//   ...
//
// Components appear in index order with their representative and a full
// parity-check matrix; `#` starts a comment line.  Extended partitions use
// the `hampart extended v1` header and carry n components at length n.
// Parsing checks structure only; import_verified additionally runs the
// partition certificate and rejects anything invalid.
#pragma once

#include "hampart/partition.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hampart {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_no, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what_arg),
          line(line_no) {}
    std::size_t line;
};

std::string serialize_partition(const CodePartition& p);
std::string serialize_extended(const ExtendedPartition& p);

CodePartition parse_partition(std::istream& in);
CodePartition parse_partition(const std::string& text);
ExtendedPartition parse_extended(std::istream& in);
ExtendedPartition parse_extended(const std::string& text);

// Parse plus full verification; throws std::runtime_error with the fault
// detail when the certificate fails.
CodePartition import_verified(const std::string& text);

} // namespace hampart
