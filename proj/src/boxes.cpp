#include "neighborly/boxes.hpp"

#include <sstream>

namespace neighborly {

NormalizedBox::NormalizedBox(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty() || factors_.size() > kMaxLength)
    throw LengthOutOfRange("box dimension out of range: " +
                           std::to_string(factors_.size()));
}

Factor NormalizedBox::factor(int i) const {
  if (i < 1 || i > dimension()) throw IndexOutOfRange(i, dimension());
  return factors_[static_cast<std::size_t>(i - 1)];
}

NormalizedBox from_string(const JokerString& u) {
  std::vector<Factor> fs;
  fs.reserve(static_cast<std::size_t>(u.length()));
  for (int i = 0; i < u.length(); ++i) {
    switch (u.at(i)) {
      case '0': fs.push_back(Factor::HalfLow); break;
      case '1': fs.push_back(Factor::HalfHigh); break;
      default: fs.push_back(Factor::Full); break;
    }
  }
  return NormalizedBox(std::move(fs));
}

JokerString to_string(const NormalizedBox& a) {
  std::string chars;
  chars.reserve(static_cast<std::size_t>(a.dimension()));
  for (Factor f : a.factors()) {
    switch (f) {
      case Factor::HalfLow: chars += '0'; break;
      case Factor::HalfHigh: chars += '1'; break;
      default: chars += '*'; break;
    }
  }
  return JokerString::parse(chars);
}

bool passes(const NormalizedBox& a, const NormalizedBox& b, int i) {
  if (a.dimension() != b.dimension())
    throw LengthMismatch(static_cast<std::size_t>(a.dimension()),
                         static_cast<std::size_t>(b.dimension()));
  Factor fa = a.factor(i);  // factor() validates i
  Factor fb = b.factor(i);
  return (fa == Factor::HalfLow && fb == Factor::HalfHigh) ||
         (fa == Factor::HalfHigh && fb == Factor::HalfLow);
}

int intersection_dimension(const NormalizedBox& a, const NormalizedBox& b) {
  if (a.dimension() != b.dimension())
    throw LengthMismatch(static_cast<std::size_t>(a.dimension()),
                         static_cast<std::size_t>(b.dimension()));
  int passing = 0;
  for (int i = 1; i <= a.dimension(); ++i)
    if (passes(a, b, i)) ++passing;
  return a.dimension() - passing;
}

bool k_neighborly_boxes(const NormalizedBox& a, const NormalizedBox& b, int k) {
  int d = a.dimension();
  if (k < 1 || k > d)
    throw InvalidParams("k must satisfy 1 <= k <= d, got k=" +
                        std::to_string(k) + ", d=" + std::to_string(d));
  int id = intersection_dimension(a, b);
  return d - k <= id && id <= d - 1;
}

std::string_view interval_token(Factor f) {
  switch (f) {
    case Factor::HalfLow: return "[0,.5]";
    case Factor::HalfHigh: return "[.5,1]";
    default: return "[0,1]";
  }
}

std::string render_box(const NormalizedBox& a) {
  std::string out;
  for (int i = 1; i <= a.dimension(); ++i) {
    if (i > 1) out += ' ';
    out += interval_token(a.factor(i));
  }
  return out;
}

NormalizedBox parse_box(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<Factor> fs;
  std::size_t pos = 0;
  while (in >> token) {
    ++pos;
    if (token == "[0,.5]") fs.push_back(Factor::HalfLow);
    else if (token == "[.5,1]") fs.push_back(Factor::HalfHigh);
    else if (token == "[0,1]") fs.push_back(Factor::Full);
    else throw ParseError("unrecognized interval token '" + token + "'", pos);
  }
  if (fs.empty()) throw ParseError("no interval tokens", 1);
  return NormalizedBox(std::move(fs));
}

}  // namespace neighborly
