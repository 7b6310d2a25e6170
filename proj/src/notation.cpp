#include "chartlab/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <string>

#include "chartlab/errors.hpp"

namespace chartlab {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c))
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view token = text_.substr(start, pos_ - start);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw SyntaxError("expected an integer", start);
    return value;
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct ParsedCycles {
  std::map<int, int> images;
  int max_abs = 0;
};

ParsedCycles parse_cycle_list(Cursor& in, bool positive_only) {
  ParsedCycles out;
  std::map<int, bool> used;
  while (in.peek('(')) {
    in.expect('(');
    if (in.peek(')')) {
      in.expect(')');
      continue;
    }
    std::vector<int> cycle;
    while (true) {
      const std::size_t at = in.position();
      const int x = in.integer();
      if (x == 0) throw SyntaxError("0 is not a signed index", at);
      if (positive_only && x < 0) throw SyntaxError("permutation entries must be positive", at);
      if (used[x]) throw SyntaxError("element " + std::to_string(x) + " appears twice", at);
      used[x] = true;
      cycle.push_back(x);
      out.max_abs = std::max(out.max_abs, std::abs(x));
      if (in.peek(',')) {
        in.expect(',');
        continue;
      }
      in.expect(')');
      break;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) out.images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return out;
}

int resolve_size(int inferred, std::optional<int> n) {
  if (!n) return inferred;
  if (*n < inferred)
    throw InvalidMap("size " + std::to_string(*n) + " is smaller than the largest entry " +
                     std::to_string(inferred));
  return *n;
}

}  // namespace

SignedIndexMap parse_cycles(std::string_view text, std::optional<int> n) {
  Cursor in(text);
  ParsedCycles parsed = parse_cycle_list(in, false);
  if (!in.done()) throw SyntaxError("unexpected character", in.position());
  const int size = resolve_size(parsed.max_abs, n);
  std::vector<int> images(static_cast<std::size_t>(2 * size));
  for (int i = 0; i < 2 * size; ++i) {
    const int k = SignedIndexMap::element_at(size, i);
    auto it = parsed.images.find(k);
    images[static_cast<std::size_t>(i)] = it == parsed.images.end() ? k : it->second;
  }
  return SignedIndexMap::from_images(size, std::move(images));
}

std::string format_cycles(const SignedIndexMap& map) {
  const int n = map.size();
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  std::string out;
  for (int a = 1; a <= n; ++a) {
    for (int start : {a, -a}) {
      if (seen[static_cast<std::size_t>(SignedIndexMap::index_of(n, start))]) continue;
      std::string cycle;
      int len = 0;
      for (int x = start; !seen[static_cast<std::size_t>(SignedIndexMap::index_of(n, x))]; x = map(x)) {
        seen[static_cast<std::size_t>(SignedIndexMap::index_of(n, x))] = true;
        if (len++ > 0) cycle += ',';
        cycle += std::to_string(x);
      }
      if (len > 1) out += "(" + cycle + ")";
    }
  }
  return out.empty() ? "()" : out;
}

std::string format_permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::string out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::string cycle;
    int len = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = perm[static_cast<std::size_t>(x - 1)]) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      if (len++ > 0) cycle += ',';
      cycle += std::to_string(x);
    }
    if (len > 1) out += "(" + cycle + ")";
  }
  return out.empty() ? "()" : out;
}

std::string format_subset(const std::vector<int>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements[i]);
  }
  return out + "}";
}

Semichart parse_semichart(std::string_view text, std::optional<int> n) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw SyntaxError("expected '<cycles>/<subset>'", text.size());
  Cursor left(text.substr(0, slash));
  ParsedCycles parsed = parse_cycle_list(left, true);
  if (!left.done()) throw SyntaxError("unexpected character", left.position());

  Cursor right(text.substr(slash + 1));
  std::vector<int> subset;
  int max_entry = parsed.max_abs;
  const bool braced = right.peek('{');
  if (braced) right.expect('{');
  if (!(braced && right.peek('}')) && !right.done()) {
    while (true) {
      const std::size_t at = slash + 1 + right.position();
      const int x = right.integer();
      if (x < 1) throw SyntaxError("subset entries must be positive", at);
      subset.push_back(x);
      max_entry = std::max(max_entry, x);
      if (right.peek(',')) {
        right.expect(',');
        continue;
      }
      break;
    }
  }
  if (braced) right.expect('}');
  if (!right.done()) throw SyntaxError("unexpected character", slash + 1 + right.position());

  const int size = resolve_size(max_entry, n);
  std::vector<int> v(static_cast<std::size_t>(size));
  for (int k = 1; k <= size; ++k) {
    auto it = parsed.images.find(k);
    v[static_cast<std::size_t>(k - 1)] = it == parsed.images.end() ? k : it->second;
  }
  return Semichart::make(size, std::move(v), subset);
}

std::string format_semichart(const Semichart& s) {
  return format_permutation(s.permutation()) + "/" + format_subset(s.subset());
}

}  // namespace chartlab
