#pragma once

#include "advicepack/errors.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace advicepack {

class BitString {
 public:
  BitString() = default;
  static BitString from_string(std::string_view zeros_and_ones);

  void push_back(bool bit) { bits_.push_back(bit); }
  void append(const BitString& other);
  bool at(std::size_t i) const { return bits_[i]; }
  bool operator[](std::size_t i) const { return bits_[i]; }
  std::size_t size() const { return bits_.size(); }
  bool operator==(const BitString&) const = default;
  std::string to_string() const;

 private:
  std::vector<bool> bits_;
};

// The advice tape is conceptually infinite: positions past the written prefix
// read as 0 and still count as accessed, so an algorithm pays for every bit
// it looks at.
class AdviceTape {
 public:
  AdviceTape() = default;
  explicit AdviceTape(BitString bits) : bits_(std::move(bits)) {}

  bool read_bit();
  std::uint64_t read_fixed(int width);  // big-endian

  std::size_t cursor() const { return cursor_; }
  std::uint64_t max_accessed() const { return max_accessed_; }
  std::size_t written_size() const { return bits_.size(); }
  const BitString& written() const { return bits_; }

  // "len:hex" with bits packed big-endian, e.g. 10110 -> "5:b0".
  std::string serialize() const;
  static AdviceTape deserialize(const std::string& text);

 private:
  BitString bits_;
  std::size_t cursor_ = 0;
  std::uint64_t max_accessed_ = 0;
};

// Self-delimited code for a non-negative integer X:
//   M ones and a zero, where M = ceil(log(L+1)) and L = ceil(log(X+1)),
//   then L on M bits, then X on L bits.
// The emitted length is exactly advice_e_length(X).
BitString encode_self_delimited(std::uint64_t x);
std::uint64_t decode_self_delimited(AdviceTape& tape);

// e(X) = ceil(log(X+1)) + 2*ceil(log(ceil(log(X+1)) + 1)) + 1
std::uint64_t advice_e_length(std::uint64_t x);

BitString encode_fixed(std::uint64_t x, int width);  // throws ValueTooWide
std::uint64_t decode_fixed(AdviceTape& tape, int width);

BitString encode_unary_terminated(std::uint64_t x);  // x ones then a zero
std::uint64_t decode_unary_terminated(AdviceTape& tape);

}  // namespace advicepack
