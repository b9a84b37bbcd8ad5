#pragma once

// Quadratic reference answers computed straight from the definitions, with no
// library code involved.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Strings = std::vector<std::string>;

inline Strings dedup_sorted(Strings p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

// Longest proper suffix of a that is a proper prefix of b.
inline std::size_t ov(const std::string& a, const std::string& b) {
  const std::size_t limit = std::min(a.size(), b.size());
  for (std::size_t l = limit; l-- > 0;)
    if (a.compare(a.size() - l, l, b, 0, l) == 0) return l;
  return 0;
}

inline std::set<std::string> prefixes(const Strings& p) {
  std::set<std::string> out;
  for (const auto& s : p)
    for (std::size_t l = 0; l <= s.size(); ++l) out.insert(s.substr(0, l));
  return out;
}

// Prefix-closed strings that are a proper suffix of some string, plus P and eps.
inline std::set<std::string> ehog_nodes(const Strings& p) {
  const auto pre = prefixes(p);
  std::set<std::string> out{""};
  for (const auto& s : p) {
    out.insert(s);
    for (std::size_t l = 1; l < s.size(); ++l)
      if (pre.count(s.substr(s.size() - l))) out.insert(s.substr(s.size() - l));
  }
  return out;
}

inline std::set<std::string> hog_nodes(const Strings& p) {
  std::set<std::string> out{""};
  for (const auto& a : p) {
    out.insert(a);
    for (const auto& b : p) out.insert(a.substr(a.size() - ov(a, b)));
  }
  return out;
}

inline std::string longest_proper_suffix_in(const std::string& s, const std::set<std::string>& nodes) {
  for (std::size_t l = s.size(); l-- > 0;)
    if (nodes.count(s.substr(s.size() - l))) return s.substr(s.size() - l);
  return "";
}

inline std::string longest_proper_prefix_in(const std::string& s, const std::set<std::string>& nodes) {
  for (std::size_t l = s.size(); l-- > 0;)
    if (nodes.count(s.substr(0, l))) return s.substr(0, l);
  return "";
}

// Random instance with deliberate duplicates and prefix-of-another strings.
inline Strings random_instance(std::mt19937_64& rng, std::size_t max_k, std::size_t max_len,
                               const std::string& alphabet) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k), ld(1, max_len), sd(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  const std::size_t k = kd(rng);
  Strings p;
  while (p.size() < k) {
    const int c = coin(rng);
    if (c == 0 && !p.empty()) {
      p.push_back(p[rng() % p.size()]);  // duplicate
    } else if (c == 1 && !p.empty()) {
      const std::string& s = p[rng() % p.size()];
      p.push_back(s.substr(0, 1 + rng() % s.size()));  // prefix of another
    } else if (c == 2 && !p.empty() && p.back().size() < max_len) {
      p.push_back(p.back() + alphabet[sd(rng)]);  // extension of another
    } else {
      std::string s(ld(rng), ' ');
      for (auto& ch : s) ch = alphabet[sd(rng)];
      p.push_back(s);
    }
  }
  return p;
}

}  // namespace oracle
