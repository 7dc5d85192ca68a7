#include "flagcalc/numeric.hpp"

#include <charconv>
#include <sstream>

namespace flagcalc {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error("malformed integer list: \"" + std::string(text) + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string format_int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

Word parse_word(std::string_view text) {
  if (text == "e") return {};
  Word word = parse_int_list(text);
  for (int& letter : word) {
    if (letter < 1) throw Error("word letters are 1-based: \"" + std::string(text) + "\"");
    --letter;
  }
  return word;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace flagcalc
