#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qlcm {

using Word = std::string;  // letters are single chars from the instance alphabet

inline bool isPrefix(std::string_view p, std::string_view w) {
  return w.size() >= p.size() && w.substr(0, p.size()) == p;
}

/// Prefix-comparable: one is a prefix of the other.
inline bool comparable(std::string_view a, std::string_view b) {
  return isPrefix(a, b) || isPrefix(b, a);
}

inline std::vector<Word> wordsOfLength(const std::string& alphabet, int n) {
  std::vector<Word> out;
  if (n == 0) return {Word{}};
  if (n < 0) return out;
  std::vector<Word> prev = wordsOfLength(alphabet, n - 1);
  out.reserve(prev.size() * alphabet.size());
  for (const auto& w : prev)
    for (char c : alphabet) out.push_back(w + c);
  return out;
}

inline std::vector<Word> wordsUpTo(const std::string& alphabet, int n) {
  std::vector<Word> out;
  for (int k = 0; k <= n; ++k)
    for (auto& w : wordsOfLength(alphabet, k)) out.push_back(std::move(w));
  return out;
}

inline std::string showWord(const Word& w) { return w.empty() ? std::string("\xCE\xB5") : w; }

}  // namespace qlcm
