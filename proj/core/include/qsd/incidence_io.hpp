#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qsd/design.hpp"

namespace qsd {

/// Malformed incidence file; message carries a line/column diagnosis.
class IncidenceParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text format: optional '#' comment lines, a "v b" header, then v lines of
/// b characters over {0,1}. Rows are points, columns are blocks.
IncidenceStructure parse_incidence(const std::string& text);
IncidenceStructure load_incidence(const std::string& path);

std::string serialize_incidence(const IncidenceStructure& d);
void save_incidence(const std::string& path, const IncidenceStructure& d,
                    const std::string& comment = "");

}  // namespace qsd
