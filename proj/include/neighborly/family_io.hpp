#pragma once

// Plain-text family files: one string per line, '#' starts a comment line,
// blank lines are skipped. All members must share a length; duplicates are
// rejected with the offending line number.

#include <iosfwd>
#include <string>

#include "neighborly/jokerstring.hpp"

namespace neighborly {

// Throws ParseError / DuplicateMember with 1-based line numbers, or
// EmptyFamily when no member line is present (a family needs a dimension).
// Tolerates surrounding whitespace and CRLF endings.
Family read_family(std::istream& in);
Family read_family_file(const std::string& path);

// One member per line, in family order, trailing newline.
void write_family(std::ostream& out, const Family& f);
void write_family_file(const std::string& path, const Family& f);

}  // namespace neighborly
