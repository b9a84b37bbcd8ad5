#pragma once

#include <bitset>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hog {

using StringIndex = std::uint32_t;
inline constexpr StringIndex kNoString = ~StringIndex{0};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ByteSet = std::bitset<256>;

ByteSet make_byte_set(std::string_view bytes);
std::string byte_set_string(const ByteSet& set);

// The dictionary P: k distinct non-empty byte strings in ascending byte order,
// stored back to back in one shared text buffer. Tries built from the set keep
// a reference to that buffer for their edge labels.
//
// Input may contain duplicates; every original position maps onto the sorted
// index of its string. sorted_to_orig() gives the smallest original index of a
// group, originals_of() the whole group.
class StringSet {
 public:
  StringSet() = default;

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::uint64_t total_length() const { return text_ ? text_->size() : 0; }
  std::size_t original_count() const { return orig_to_sorted_.size(); }

  std::string_view operator[](StringIndex i) const {
    return std::string_view(*text_).substr(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }
  std::uint64_t offset(StringIndex i) const { return offsets_[i]; }

  const std::shared_ptr<const std::string>& text() const { return text_; }

  StringIndex orig_to_sorted(StringIndex orig) const { return orig_to_sorted_.at(orig); }
  StringIndex sorted_to_orig(StringIndex sorted) const { return sorted_to_orig_.at(sorted); }
  std::span<const StringIndex> originals_of(StringIndex sorted) const;

  const ByteSet& alphabet() const { return alphabet_; }

  std::vector<std::string> strings() const;

  // Original input order, duplicates included.
  std::vector<std::string> original_strings() const;

  bool operator==(const StringSet& other) const;

 private:
  friend StringSet normalize(std::vector<std::string> raw);

  std::shared_ptr<const std::string> text_;
  std::vector<std::uint64_t> offsets_;
  std::vector<StringIndex> orig_to_sorted_;
  std::vector<StringIndex> sorted_to_orig_;
  std::vector<std::uint32_t> group_begin_;
  std::vector<StringIndex> group_members_;
  ByteSet alphabet_;
};

// Sorts by byte value and removes exact duplicates. Throws on empty input or on
// any empty string.
StringSet normalize(std::vector<std::string> raw);

// One string per line, LF or CRLF terminated.
StringSet load_lines(const std::filesystem::path& path);
StringSet parse_lines(std::istream& in);

// FASTA records; sequence lines are joined and whitespace stripped. Records
// with a byte outside `filter` are dropped.
StringSet load_fasta(const std::filesystem::path& path,
                     const std::optional<ByteSet>& filter = std::nullopt);
StringSet parse_fasta(std::istream& in, const std::optional<ByteSet>& filter = std::nullopt);

// k strings of near-equal length (floor(n/k), the first n mod k one byte
// longer), bytes drawn uniformly from `alphabet` with std::mt19937_64 seeded by
// `seed`. A string equal to an earlier one is redrawn up to kGenerateRetries
// times.
inline constexpr int kGenerateRetries = 64;
StringSet generate_random(std::size_t k, std::uint64_t n, const ByteSet& alphabet,
                          std::uint64_t seed);

// Writes the strings in original order, one per line.
void write_lines(const StringSet& set, std::ostream& out);

}  // namespace hog
