#include "neighborly/family_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace neighborly {

namespace {

std::string strip(const std::string& line) {
  std::size_t end = line.size();
  while (end > 0 && (line[end - 1] == ' ' || line[end - 1] == '\t' ||
                     line[end - 1] == '\r'))
    --end;
  std::size_t begin = 0;
  while (begin < end && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
  return line.substr(begin, end - begin);
}

}  // namespace

Family read_family(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  Family f(1);
  bool have_dimension = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string text = strip(line);
    if (text.empty() || text[0] == '#') continue;
    JokerString s = [&] {
      try {
        return JokerString::parse(text);
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno);
      }
    }();
    if (!have_dimension) {
      f = Family(s.length());
      have_dimension = true;
    } else if (s.length() != f.dimension()) {
      throw ParseError("length " + std::to_string(s.length()) +
                           " differs from family dimension " +
                           std::to_string(f.dimension()),
                       lineno);
    }
    if (!f.add(s)) throw DuplicateMember(text, lineno);
  }
  if (!have_dimension) throw EmptyFamily("read_family");
  return f;
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_family(in);
}

void write_family(std::ostream& out, const Family& f) {
  for (const auto& s : f) out << s.str() << '\n';
}

void write_family_file(const std::string& path, const Family& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_family(out, f);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace neighborly
