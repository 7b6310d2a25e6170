#pragma once

#include <string_view>

#include "chartlab/chart_ops.hpp"
#include "chartlab/notation.hpp"
#include "chartlab/signed_word.hpp"
#include "oracles.hpp"

namespace testing {

inline chartlab::Chart chart(std::string_view text) {
  return chartlab::validate_chart(chartlab::parse_cycles(text));
}

inline chartlab::Chart chart(std::string_view text, int n) {
  return chartlab::validate_chart(chartlab::parse_cycles(text, n));
}

inline chartlab::Chart from_oracle(const oracle::Map& t, int n) {
  return chartlab::validate_chart(chartlab::SignedIndexMap::from_images(n, oracle::flat(t, n)));
}

inline oracle::Map to_oracle(const chartlab::Chart& c) {
  oracle::Map t;
  for (int k = 1; k <= c.size(); ++k) {
    t[k] = c(k);
    t[-k] = c(-k);
  }
  return t;
}

inline chartlab::Semichart from_oracle(const oracle::Semi& s) {
  std::vector<int> subset;
  for (std::size_t i = 0; i < s.in_s.size(); ++i)
    if (s.in_s[i]) subset.push_back(static_cast<int>(i) + 1);
  return chartlab::Semichart::make(static_cast<int>(s.v.size()), s.v, subset);
}

// The oracle word as a library word with letters A, B, ...
inline chartlab::SignedWord to_word(const oracle::Word& w) {
  std::vector<std::string> letters;
  for (int x : w.letters) letters.push_back(std::string(1, static_cast<char>('A' + x)));
  return {letters, w.unmarked};
}

inline oracle::Word from_word(const chartlab::SignedWord& w) {
  std::map<std::string, int> ids;
  oracle::Word out{{}, w.marks()};
  for (const auto& l : w.letters()) out.letters.push_back(ids.try_emplace(l, static_cast<int>(ids.size())).first->second);
  return out;
}

}  // namespace testing
