#include "hog/string_set.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <unordered_set>

namespace hog {

ByteSet make_byte_set(std::string_view bytes) {
  ByteSet set;
  for (unsigned char c : bytes) set.set(c);
  return set;
}

std::string byte_set_string(const ByteSet& set) {
  std::string out;
  for (int c = 0; c < 256; ++c)
    if (set.test(c)) out.push_back(static_cast<char>(c));
  return out;
}

std::span<const StringIndex> StringSet::originals_of(StringIndex sorted) const {
  if (sorted >= size()) throw Error("string index out of range");
  return std::span<const StringIndex>(group_members_)
      .subspan(group_begin_[sorted], group_begin_[sorted + 1] - group_begin_[sorted]);
}

std::vector<std::string> StringSet::strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (StringIndex i = 0; i < size(); ++i) out.emplace_back((*this)[i]);
  return out;
}

std::vector<std::string> StringSet::original_strings() const {
  std::vector<std::string> out;
  out.reserve(original_count());
  for (StringIndex s : orig_to_sorted_) out.emplace_back((*this)[s]);
  return out;
}

bool StringSet::operator==(const StringSet& other) const {
  auto text_of = [](const StringSet& s) { return s.text_ ? std::string_view(*s.text_) : std::string_view(); };
  return text_of(*this) == text_of(other) && offsets_ == other.offsets_ &&
         orig_to_sorted_ == other.orig_to_sorted_ && alphabet_ == other.alphabet_;
}

StringSet normalize(std::vector<std::string> raw) {
  if (raw.empty()) throw Error("no strings in input");
  if (raw.size() >= kNoString) throw Error("too many strings");
  for (const auto& s : raw)
    if (s.empty()) throw Error("empty string in input");

  std::vector<StringIndex> order(raw.size());
  std::iota(order.begin(), order.end(), StringIndex{0});
  // std::string compares through char_traits<char>::compare, which is
  // unsigned-byte order.
  std::stable_sort(order.begin(), order.end(),
                   [&](StringIndex a, StringIndex b) { return raw[a] < raw[b]; });

  StringSet set;
  set.orig_to_sorted_.resize(raw.size());
  set.group_members_.reserve(raw.size());
  std::string text;
  std::uint64_t total = 0;
  for (const auto& s : raw) total += s.size();
  text.reserve(total);

  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    StringIndex orig = order[pos];
    bool fresh = pos == 0 || raw[orig] != raw[order[pos - 1]];
    if (fresh) {
      set.offsets_.push_back(text.size());
      set.sorted_to_orig_.push_back(orig);
      set.group_begin_.push_back(static_cast<std::uint32_t>(set.group_members_.size()));
      text += raw[orig];
      for (unsigned char c : raw[orig]) set.alphabet_.set(c);
    }
    set.orig_to_sorted_[orig] = static_cast<StringIndex>(set.sorted_to_orig_.size() - 1);
    set.group_members_.push_back(orig);
  }
  set.offsets_.push_back(text.size());
  set.group_begin_.push_back(static_cast<std::uint32_t>(set.group_members_.size()));
  set.text_ = std::make_shared<const std::string>(std::move(text));
  return set;
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

}  // namespace

StringSet parse_lines(std::istream& in) {
  std::vector<std::string> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw Error("empty string in input (line " + std::to_string(line_no) + ")");
    raw.push_back(std::move(line));
  }
  if (in.bad()) throw Error("read error");
  return normalize(std::move(raw));
}

StringSet load_lines(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_lines(in);
}

StringSet parse_fasta(std::istream& in, const std::optional<ByteSet>& filter) {
  std::vector<std::string> raw;
  std::string line;
  std::string seq;
  bool in_record = false;
  std::size_t records = 0;
  auto flush = [&] {
    if (!in_record) return;
    ++records;
    bool keep = !seq.empty();
    if (keep && filter)
      keep = std::all_of(seq.begin(), seq.end(), [&](char c) { return filter->test(static_cast<unsigned char>(c)); });
    if (keep) raw.push_back(std::move(seq));
    seq.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '>') {
      flush();
      in_record = true;
      continue;
    }
    for (unsigned char c : line)
      if (!is_space(c)) {
        if (!in_record) throw Error("sequence data before the first FASTA header");
        seq.push_back(static_cast<char>(c));
      }
  }
  if (in.bad()) throw Error("read error");
  flush();
  if (raw.empty())
    throw Error(records == 0 ? "no FASTA records in input" : "no FASTA records survived filtering");
  return normalize(std::move(raw));
}

StringSet load_fasta(const std::filesystem::path& path, const std::optional<ByteSet>& filter) {
  auto in = open_input(path);
  return parse_fasta(in, filter);
}

StringSet generate_random(std::size_t k, std::uint64_t n, const ByteSet& alphabet, std::uint64_t seed) {
  if (k == 0) throw Error("k must be positive");
  if (n < k) throw Error("n must be at least k");
  std::string symbols = byte_set_string(alphabet);
  if (symbols.empty()) throw Error("alphabet is empty");

  std::mt19937_64 rng(seed);
  const std::uint64_t sigma = symbols.size();
  // Largest multiple of sigma representable; draws at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % sigma;
  auto draw = [&] {
    std::uint64_t r;
    do r = rng();
    while (r >= limit);
    return symbols[r % sigma];
  };

  const std::uint64_t base = n / k;
  const std::uint64_t longer = n % k;
  std::vector<std::string> raw;
  raw.reserve(k);
  std::unordered_set<std::string_view> seen;
  seen.reserve(k * 2);
  for (std::size_t i = 0; i < k; ++i) {
    std::string s(base + (i < longer ? 1 : 0), '\0');
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt > kGenerateRetries) throw Error("cannot generate k distinct strings");
      for (auto& c : s) c = draw();
      if (!seen.contains(s)) break;
    }
    raw.push_back(std::move(s));
    // raw is reserved, so the views stay valid.
    seen.insert(raw.back());
  }
  return normalize(std::move(raw));
}

void write_lines(const StringSet& set, std::ostream& out) {
  for (StringIndex o = 0; o < set.original_count(); ++o) out << set[set.orig_to_sorted(o)] << '\n';
}

}  // namespace hog
