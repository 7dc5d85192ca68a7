#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flagcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Rejected user input: unsupported group, malformed word, element outside W^P.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity violated an identity that must hold by construction.
/// Seeing one of these means a sign or indexing convention is wrong somewhere.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple-reflection indices, 0-based internally. Text form is 1-based
/// (Bourbaki node labels), comma separated: "1,3,2".
using Word = std::vector<int>;

std::string format_word(const Word& word);
Word parse_word(std::string_view text);

/// Comma-separated integer list, e.g. "6,0" or "3,1". Empty string gives {}.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(const std::vector<int>& values);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace flagcalc
