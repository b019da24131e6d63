#pragma once

#include <algorithm>
#include <cctype>
#include <string>

#include "ludics/core.hpp"
#include "ludics/text.hpp"

namespace ludics::detail {

class Scanner {
 public:
  explicit Scanner(std::string src) : src_(std::move(src)) {}

  void skip() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        if (src_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (src_.compare(pos_, 2, "//") == 0) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }

  bool at_end() {
    skip();
    return pos_ >= src_.size();
  }

  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(const std::string& tok) {
    skip();
    if (src_.compare(pos_, tok.size(), tok) != 0) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }

  bool at_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    if (!at_identifier()) fail("expected an identifier");
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '\''))
      ++pos_;
    return src_.substr(start, pos_ - start);
  }

  bool at_keyword(const std::string& kw) {
    skip();
    if (src_.compare(pos_, kw.size(), kw) != 0) return false;
    std::size_t e = pos_ + kw.size();
    return e >= src_.size() || !(std::isalnum(static_cast<unsigned char>(src_[e])) || src_[e] == '_');
  }

  int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoi(src_.substr(start, pos_ - start));
  }

  Address address() {
    Address a(identifier());
    while (pos_ < src_.size() && src_[pos_] == '.' && pos_ + 1 < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      ++pos_;
      a.steps.push_back(number());
    }
    return a;
  }

  Ramification ramification() {
    expect("{");
    std::vector<int> xs;
    if (!accept("}")) {
      do xs.push_back(number());
      while (accept(","));
      expect("}");
    }
    return make_ramification(std::move(xs));
  }

  bool at_action() {
    char c = peek();
    return c == '+' || c == '-' || c == '#';
  }

  Action action() {
    if (accept("#")) return Action::dai();
    bool pos = accept("+");
    if (!pos && !accept("-")) fail("expected an action");
    Address a = address();
    Ramification r = ramification();
    return pos ? Action::pos(std::move(a), std::move(r)) : Action::neg(std::move(a), std::move(r));
  }

  Sequent sequent() {
    Sequent s;
    if (at_identifier()) s.left = address();
    expect("|-");
    if (at_identifier()) {
      do s.right.push_back(address());
      while (accept(","));
    }
    std::sort(s.right.begin(), s.right.end());
    return s;
  }

  Base base() {
    std::vector<Sequent> ss;
    do ss.push_back(sequent());
    while (accept(";"));
    Base b(std::move(ss));
    validate_base(b);
    return b;
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip();
    std::string near = src_.substr(pos_, 16);
    if (auto nl = near.find('\n'); nl != std::string::npos) near.resize(nl);
    auto bol = pos_ == 0 ? std::string::npos : src_.rfind('\n', pos_ - 1);
    int col = static_cast<int>(pos_ - (bol == std::string::npos ? 0 : bol + 1)) + 1;
    throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(col) + ": " + msg +
                         (near.empty() ? "" : " near '" + near + "'"),
                     line_, col);
  }

  int line() const { return line_; }

 private:
  std::string src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace ludics::detail
