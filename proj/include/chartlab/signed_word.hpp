#pragma once

#include <string>
#include <vector>

namespace chartlab {

/// A word w : {1..n} -> E together with the set S of positions printed
/// without '+'.  Letters are opaque non-empty tokens.
class SignedWord {
 public:
  /// The empty word.
  SignedWord() = default;

  /// Alphabet defaults to the letters used, in order of first occurrence.
  SignedWord(std::vector<std::string> letters, std::vector<bool> in_s);
  /// Explicit alphabet; it may contain letters that do not occur (a non-full word).
  SignedWord(std::vector<std::string> letters, std::vector<bool> in_s,
             std::vector<std::string> alphabet);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  /// Letter at position k, 1-based.
  const std::string& letter(int k) const { return letters_[static_cast<std::size_t>(k - 1)]; }
  /// True when position k is unmarked, i.e. belongs to S.
  bool in_s(int k) const { return in_s_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  const std::vector<bool>& marks() const noexcept { return in_s_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::vector<int> subset() const;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;

 private:
  std::vector<std::string> letters_;
  std::vector<bool> in_s_;
  std::vector<std::string> alphabet_;
};

}  // namespace chartlab
