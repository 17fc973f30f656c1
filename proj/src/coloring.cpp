#include "rado/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "rado/errors.hpp"

namespace rado {

Coloring::Coloring(std::vector<Color> colors, int r) : colors_(std::move(colors)), r_(r) {
  if (colors_.empty()) throw InvalidArgument("coloring must cover at least one integer");
  if (r_ < 1 || r_ > 10) throw InvalidArgument("color count must be in 1..10");
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] >= r_)
      throw InvalidArgument("color " + std::to_string(colors_[i]) + " at position " +
                            std::to_string(i + 1) + " is not below r=" + std::to_string(r_));
  }
}

Coloring Coloring::uniform(int n, int r, Color c) {
  if (n < 1) throw InvalidArgument("n must be positive");
  return Coloring(std::vector<Color>(static_cast<std::size_t>(n), c), r);
}

int Coloring::count_of(Color c) const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

std::string Coloring::to_digits() const {
  std::string s;
  s.reserve(colors_.size());
  for (Color c : colors_) s.push_back(static_cast<char>('0' + c));
  return s;
}

std::string Coloring::to_rle() const {
  std::string s;
  std::size_t i = 0;
  while (i < colors_.size()) {
    std::size_t j = i;
    while (j < colors_.size() && colors_[j] == colors_[i]) ++j;
    if (!s.empty()) s += ',';
    s += std::to_string(colors_[i]) + ":" + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long parse_number(std::string_view tok, std::string_view whole) {
  tok = trim(tok);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("bad token '" + std::string(tok) + "' in coloring '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Coloring parse_coloring(std::string_view text, int r) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty coloring");
  std::vector<Color> colors;
  if (body.find(':') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const std::size_t comma = std::min(body.find(',', pos), body.size());
      const std::string_view run = body.substr(pos, comma - pos);
      const std::size_t colon = run.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("bad token '" + std::string(trim(run)) + "': expected color:length");
      const long c = parse_number(run.substr(0, colon), body);
      const long len = parse_number(run.substr(colon + 1), body);
      if (c < 0 || c > 9) throw ParseError("bad token '" + std::string(trim(run)) + "': color must be 0..9");
      if (len < 1) throw ParseError("bad token '" + std::string(trim(run)) + "': run length must be positive");
      if (colors.size() + static_cast<std::size_t>(len) > (std::size_t{1} << 31))
        throw ParseError("coloring too long");
      colors.insert(colors.end(), static_cast<std::size_t>(len), static_cast<Color>(c));
      pos = comma + 1;
    }
  } else {
    colors.reserve(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
      const char ch = body[i];
      if (ch < '0' || ch > '9')
        throw ParseError("bad token '" + std::string(1, ch) + "' at position " + std::to_string(i + 1));
      colors.push_back(static_cast<Color>(ch - '0'));
    }
  }
  const int max_color = *std::max_element(colors.begin(), colors.end());
  if (r == 0) r = std::max(2, max_color + 1);
  if (max_color >= r)
    throw ParseError("color " + std::to_string(max_color) + " is out of range for r=" + std::to_string(r));
  return Coloring(std::move(colors), r);
}

}  // namespace rado
