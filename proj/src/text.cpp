#include <functional>

#include "ludics/text.hpp"
#include "scanner.hpp"

namespace ludics {

std::string to_string(const Address& a) {
  std::string s = a.root;
  for (int i : a.steps) s += "." + std::to_string(i);
  return s;
}

std::string to_string(const Ramification& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "}";
}

std::string to_string(const Action& a) {
  if (a.daimon) return "#";
  return (a.pol == Polarity::Pos ? "+" : "-") + to_string(a.focus) + to_string(a.ram);
}

std::string to_string(const Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + to_string(s[i]);
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out;
  if (s.left) out += to_string(*s.left) + " ";
  out += "|-";
  for (std::size_t i = 0; i < s.right.size(); ++i) out += (i ? ", " : " ") + to_string(s.right[i]);
  return out;
}

std::string to_string(const Base& b) {
  std::string out;
  for (std::size_t i = 0; i < b.sequents.size(); ++i) out += (i ? "; " : "") + to_string(b.sequents[i]);
  return out;
}

std::string design_body(const Design& d) {
  std::function<std::string(const Seq&)> tree = [&](const Seq& c) {
    std::string s = to_string(c.back());
    auto kids = d.children(c);
    if (kids.empty()) return s;
    s += " {";
    for (const auto& k : kids) {
      Seq w = c;
      w.push_back(k);
      s += " " + tree(w);
    }
    return s + " }";
  };
  std::string out = "{";
  for (const auto& r : d.first_actions()) out += " " + tree(Seq{r});
  return out + " }";
}

namespace {

template <class F>
auto parse_whole(const std::string& s, F f) {
  detail::Scanner sc(s);
  auto v = f(sc);
  if (!sc.at_end()) sc.fail("trailing input");
  return v;
}

}  // namespace

Address parse_address(const std::string& s) {
  return parse_whole(s, [](detail::Scanner& sc) { return sc.address(); });
}

Action parse_action(const std::string& s) {
  return parse_whole(s, [](detail::Scanner& sc) { return sc.action(); });
}

Seq parse_seq(const std::string& s) {
  return parse_whole(s, [](detail::Scanner& sc) {
    Seq out;
    while (sc.at_action()) out.push_back(sc.action());
    return out;
  });
}

Base parse_base(const std::string& s) {
  return parse_whole(s, [](detail::Scanner& sc) { return sc.base(); });
}

}  // namespace ludics
