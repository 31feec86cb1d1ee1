#include "asep/textio.hpp"

#include <charconv>
#include <stdexcept>

namespace asep {
namespace {

[[noreturn]] void bad(const char* what) {
  throw std::invalid_argument(std::string("configuration text: ") + what);
}

void skip_ellipsis(std::string_view& s) {
  if (s.substr(0, 3) == "...")
    s.remove_prefix(3);
  else if (s.substr(0, 3) == "…")
    s.remove_prefix(3);  // UTF-8 ellipsis is also 3 bytes
}

std::int64_t parse_int(std::string_view& s) {
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) bad("expected an integer");
  s.remove_prefix(ptr - first);
  return value;
}

bool consume(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

void expect(std::string_view& s, char c, const char* what) {
  if (!consume(s, c)) bad(what);
}

// Optional "[lo]" prefix, site 1 by default.
std::int64_t parse_window_lo(std::string_view& s) {
  if (!consume(s, '[')) return 1;
  std::int64_t lo = parse_int(s);
  expect(s, ']', "expected ']' after window start");
  return lo;
}

Tail parse_tail(std::string_view& s) {
  expect(s, '(', "expected '(' before tail symbol");
  if (s.empty()) bad("missing tail symbol");
  char c = s.front();
  if (c != '0' && c != '1') bad("tail symbol must be 0 or 1");
  s.remove_prefix(1);
  expect(s, ')', "expected ')' after tail symbol");
  return c == '1' ? Tail::particles : Tail::holes;
}

}  // namespace

std::string format_config(const SegmentConfig& c) {
  std::string out;
  if (c.lo != 1) {
    out += '[';
    out += std::to_string(c.lo);
    out += ';';
    out += std::to_string(c.hi());
    out += ']';
  }
  for (auto v : c.occ) out += v ? '1' : '0';
  return out;
}

SegmentConfig parse_segment_config(std::string_view text) {
  SegmentConfig c;
  std::int64_t declared_hi = 0;
  bool has_interval = false;
  if (consume(text, '[')) {
    c.lo = parse_int(text);
    expect(text, ';', "expected ';' inside interval");
    declared_hi = parse_int(text);
    expect(text, ']', "expected ']' after interval");
    has_interval = true;
  } else {
    c.lo = 1;
  }
  for (char ch : text) {
    if (ch != '0' && ch != '1') bad("segment symbols must be 0 or 1");
    c.occ.push_back(ch == '1');
  }
  if (c.occ.empty()) bad("segment configuration has no sites");
  if (has_interval && c.hi() != declared_hi)
    bad("interval length does not match the occupancy string");
  return c;
}

std::string format_config(const LineConfig& c) {
  std::string out = "...(";
  out += c.left_tail == Tail::particles ? '1' : '0';
  out += ")|";
  if (c.window_lo != 1) {
    out += '[';
    out += std::to_string(c.window_lo);
    out += ']';
  }
  for (auto v : c.occ) out += v ? '1' : '0';
  out += "|(";
  out += c.right_tail == Tail::particles ? '1' : '0';
  out += ")...";
  return out;
}

LineConfig parse_line_config(std::string_view text) {
  LineConfig c;
  skip_ellipsis(text);
  c.left_tail = parse_tail(text);
  expect(text, '|', "expected '|' after left tail");
  c.window_lo = parse_window_lo(text);
  c.occ.clear();
  while (!text.empty() && (text.front() == '0' || text.front() == '1')) {
    c.occ.push_back(text.front() == '1');
    text.remove_prefix(1);
  }
  if (c.occ.empty()) bad("line window is empty");
  expect(text, '|', "expected '|' after window");
  c.right_tail = parse_tail(text);
  skip_ellipsis(text);
  if (!text.empty()) bad("trailing characters");
  return c;
}

std::string format_config(const ColoredConfig& c) {
  std::string out;
  if (c.lo != 1) {
    out += '[';
    out += std::to_string(c.lo);
    out += ']';
  }
  out += '(';
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.colors[i]);
  }
  out += ')';
  return out;
}

ColoredConfig parse_colored_config(std::string_view text) {
  ColoredConfig c;
  c.lo = parse_window_lo(text);
  expect(text, '(', "expected '(' before color list");
  for (;;) {
    c.colors.push_back(parse_int(text));
    if (consume(text, ')')) break;
    expect(text, ',', "expected ',' between colors");
  }
  if (!text.empty()) bad("trailing characters");
  validate(c);
  return c;
}

std::string format_config(const TwoSpeciesConfig& c) {
  std::string out = "...(";
  out += c.left_tail == Species::first ? '1' : '0';
  out += ")|";
  if (c.window_lo != 1) {
    out += '[';
    out += std::to_string(c.window_lo);
    out += ']';
  }
  for (auto v : c.occ)
    out += v == Species::first ? '1' : (v == Species::second ? '2' : '0');
  out += "|(";
  out += c.right_tail == Species::first ? '1' : '0';
  out += ")...";
  return out;
}

TwoSpeciesConfig parse_two_species_config(std::string_view text) {
  TwoSpeciesConfig c;
  skip_ellipsis(text);
  c.left_tail = parse_tail(text) == Tail::particles ? Species::first : Species::hole;
  expect(text, '|', "expected '|' after left tail");
  c.window_lo = parse_window_lo(text);
  c.occ.clear();
  while (!text.empty() &&
         (text.front() == '0' || text.front() == '1' || text.front() == '2')) {
    char ch = text.front();
    c.occ.push_back(ch == '1' ? Species::first
                              : (ch == '2' ? Species::second : Species::hole));
    text.remove_prefix(1);
  }
  if (c.occ.empty()) bad("two-species window is empty");
  expect(text, '|', "expected '|' after window");
  c.right_tail = parse_tail(text) == Tail::particles ? Species::first : Species::hole;
  skip_ellipsis(text);
  if (!text.empty()) bad("trailing characters");
  return c;
}

}  // namespace asep
