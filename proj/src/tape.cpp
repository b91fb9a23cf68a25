#include "advicepack/tape.hpp"

#include "advicepack/rational.hpp"

#include <sstream>

namespace advicepack {

BitString BitString::from_string(std::string_view zeros_and_ones) {
  BitString out;
  for (char c : zeros_and_ones) {
    if (c == '0')
      out.push_back(false);
    else if (c == '1')
      out.push_back(true);
    else
      throw BadParams("bit string may contain only 0 and 1");
  }
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

bool AdviceTape::read_bit() {
  bool bit = cursor_ < bits_.size() ? bits_.at(cursor_) : false;
  ++cursor_;
  if (cursor_ > max_accessed_) max_accessed_ = cursor_;
  return bit;
}

std::uint64_t AdviceTape::read_fixed(int width) {
  if (width < 0 || width > 64) throw BadParams("fixed-width read out of range");
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) value = (value << 1) | (read_bit() ? 1u : 0u);
  return value;
}

std::string AdviceTape::serialize() const {
  static const char* digits = "0123456789abcdef";
  std::ostringstream out;
  out << bits_.size() << ":";
  for (std::size_t i = 0; i < bits_.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < bits_.size() && bits_.at(i + j)) nibble |= 1;
    }
    out << digits[nibble];
  }
  return out.str();
}

AdviceTape AdviceTape::deserialize(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw BadParams("tape format is len:hex");
  std::size_t len = 0;
  try {
    len = std::stoull(text.substr(0, colon));
  } catch (const std::exception&) {
    throw BadParams("bad tape length in '" + text + "'");
  }
  std::string hex = text.substr(colon + 1);
  if (hex.size() != (len + 3) / 4)
    throw BadParams("tape hex length does not match bit length");
  BitString bits;
  for (std::size_t i = 0; i < len; ++i) {
    char c = hex[i / 4];
    int nibble;
    if (c >= '0' && c <= '9')
      nibble = c - '0';
    else if (c >= 'a' && c <= 'f')
      nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      nibble = c - 'A' + 10;
    else
      throw BadParams("bad hex digit in tape");
    bits.push_back((nibble >> (3 - i % 4)) & 1);
  }
  return AdviceTape(std::move(bits));
}

std::uint64_t advice_e_length(std::uint64_t x) {
  std::uint64_t payload = ceil_log2(BigInt(x) + 1);
  std::uint64_t width_field = ceil_log2_u64(payload + 1);
  return payload + 2 * width_field + 1;
}

BitString encode_fixed(std::uint64_t x, int width) {
  if (width < 0 || width > 64) throw BadParams("fixed width out of range");
  if (width < 64 && (x >> width) != 0)
    throw ValueTooWide(std::to_string(x) + " needs more than " +
                       std::to_string(width) + " bits");
  BitString out;
  for (int i = width - 1; i >= 0; --i) out.push_back((x >> i) & 1);
  return out;
}

std::uint64_t decode_fixed(AdviceTape& tape, int width) {
  return tape.read_fixed(width);
}

BitString encode_unary_terminated(std::uint64_t x) {
  BitString out;
  for (std::uint64_t i = 0; i < x; ++i) out.push_back(true);
  out.push_back(false);
  return out;
}

std::uint64_t decode_unary_terminated(AdviceTape& tape) {
  std::uint64_t x = 0;
  while (tape.read_bit()) ++x;
  return x;
}

BitString encode_self_delimited(std::uint64_t x) {
  int payload = ceil_log2(BigInt(x) + 1);
  int width_field = ceil_log2_u64(static_cast<std::uint64_t>(payload) + 1);
  BitString out = encode_unary_terminated(width_field);
  out.append(encode_fixed(static_cast<std::uint64_t>(payload), width_field));
  out.append(encode_fixed(x, payload));
  return out;
}

std::uint64_t decode_self_delimited(AdviceTape& tape) {
  std::uint64_t width_field = decode_unary_terminated(tape);
  if (width_field > 64) throw BadParams("self-delimited code too wide");
  std::uint64_t payload = tape.read_fixed(static_cast<int>(width_field));
  if (payload > 64) throw BadParams("self-delimited payload too wide");
  return tape.read_fixed(static_cast<int>(payload));
}

}  // namespace advicepack
