#include "kcf/notation.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "kcf/error.hpp"

namespace kcf {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      positions_.push_back(i);
    }
    end_position_ = text.size();
  }

  KroneckerStructure structure() {
    std::vector<JordanBlock> jordan;
    std::vector<int> right;
    std::vector<int> left;
    term(jordan, right, left);
    while (peek() == '+') {
      ++at_;
      term(jordan, right, left);
    }
    if (at_ != chars_.size()) fail("'+' or end of input");
    return KroneckerStructure(std::move(jordan), std::move(right), std::move(left));
  }

  EigenvalueLabel label_only() {
    const auto mu = label();
    if (at_ != chars_.size()) fail("end of input");
    return mu;
  }

 private:
  char peek() const { return at_ < chars_.size() ? chars_[at_] : '\0'; }

  std::size_t position() const { return at_ < positions_.size() ? positions_[at_] : end_position_; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(position(), expected,
                     "parse error at position " + std::to_string(position()) + ": expected " +
                         expected);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("'") + c + "'");
    ++at_;
  }

  long number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<int>::max()) fail("a smaller number");
      ++at_;
    }
    return value;
  }

  EigenvalueLabel label() {
    if (peek() == 'i') {
      ++at_;
      expect('n');
      expect('f');
      return EigenvalueLabel::infinity();
    }
    if (peek() != 'e') fail("'inf' or 'e'");
    ++at_;
    return EigenvalueLabel::finite(static_cast<std::uint32_t>(number()));
  }

  void term(std::vector<JordanBlock>& jordan, std::vector<int>& right, std::vector<int>& left) {
    if (peek() == 'J') {
      ++at_;
      expect('(');
      const auto size_position = position();
      const long size = number();
      expect(';');
      const auto mu = label();
      expect(')');
      if (size < 1) {
        throw Error(Errc::domain_error, "Jordan block size must be >= 1 (position " +
                                            std::to_string(size_position) + ")");
      }
      jordan.push_back({mu, static_cast<int>(size)});
      return;
    }
    if (peek() == 'L') {
      ++at_;
      bool transposed = false;
      if (peek() == 'T') {
        transposed = true;
        ++at_;
      }
      expect('(');
      const long size = number();
      expect(')');
      (transposed ? left : right).push_back(static_cast<int>(size));
      return;
    }
    fail("'J(', 'L(' or 'LT('");
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t at_ = 0;
};

}  // namespace

KroneckerStructure parse_structure(std::string_view text) { return Parser(text).structure(); }

EigenvalueLabel parse_label(std::string_view text) { return Parser(text).label_only(); }

std::string format_structure(const KroneckerStructure& k) {
  std::string out;
  auto add = [&out](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  for (const auto& b : k.jordan()) {
    add("J(" + std::to_string(b.size) + ";" + b.eigenvalue.to_string() + ")");
  }
  for (int s : k.right()) add("L(" + std::to_string(s) + ")");
  for (int s : k.left()) add("LT(" + std::to_string(s) + ")");
  return out;
}

}  // namespace kcf
