#include "cusemi/element.hpp"

#include <sstream>

namespace cusemi {

std::optional<ExtScalar> ExtScalar::parse(const std::string& s) {
  if (s == "inf") return ExtScalar::infinity();
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) return std::nullopt;
      return ExtScalar(n);
    }
    long long n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) return std::nullopt;
    std::string ds = s.substr(slash + 1);
    long long d = std::stoll(ds, &used);
    if (used != ds.size() || d == 0) return std::nullopt;
    return ExtScalar(Rat(n, d));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool Element::operator==(const Element& o) const {
  if (sig != o.sig) return false;
  if (payload.index() != o.payload.index()) return false;
  if (std::holds_alternative<ScalarVec>(payload))
    return std::get<ScalarVec>(payload) == std::get<ScalarVec>(o.payload);
  if (std::holds_alternative<GluedElem>(payload)) {
    const auto& a = std::get<GluedElem>(payload);
    const auto& b = std::get<GluedElem>(o.payload);
    if (a.soft != b.soft) return false;
    return a.soft ? a.rays == b.rays : a.comp == b.comp;
  }
  const auto& a = std::get<PresElem>(payload);
  const auto& b = std::get<PresElem>(o.payload);
  if (a.vpart != b.vpart) return false;
  return a.vpart ? a.v == b.v : a.fn == b.fn;
}

std::string format_scalars(const ScalarVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

namespace {

std::string format_ints(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

// Splits "a,b,c" at top level; empty input gives an empty list.
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<ScalarVec> parse_scalar_list(const std::string& body) {
  ScalarVec out;
  for (const auto& p : split_commas(body)) {
    auto s = ExtScalar::parse(p);
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  return out;
}

std::optional<std::vector<long long>> parse_int_list(const std::string& body) {
  std::vector<long long> out;
  for (const auto& p : split_commas(body)) {
    try {
      size_t used = 0;
      long long n = std::stoll(p, &used);
      if (used != p.size()) return std::nullopt;
      out.push_back(n);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace

std::string format_element(const Element& e) {
  if (std::holds_alternative<ScalarVec>(e.payload)) return format_scalars(e.scalars());
  if (std::holds_alternative<GluedElem>(e.payload)) {
    const auto& g = e.glued();
    if (g.soft) return "s" + format_scalars(g.rays);
    return "c" + format_ints(g.comp);
  }
  const auto& p = e.pres();
  if (p.vpart) return "v" + format_ints(p.v);
  return "f" + format_scalars(p.fn);
}

std::optional<Element> parse_element(const std::string& sig, const std::string& text) {
  if (text.size() < 2) return std::nullopt;
  size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')') return std::nullopt;
  std::string tag = text.substr(0, open);
  std::string body = text.substr(open + 1, text.size() - open - 2);
  Element e;
  e.sig = sig;
  if (tag.empty()) {
    auto v = parse_scalar_list(body);
    if (!v) return std::nullopt;
    e.payload = *v;
    return e;
  }
  if (tag == "c" || tag == "v") {
    auto v = parse_int_list(body);
    if (!v) return std::nullopt;
    if (tag == "c") {
      GluedElem g;
      g.soft = false;
      g.comp = *v;
      e.payload = g;
    } else {
      PresElem p;
      p.vpart = true;
      p.v = *v;
      e.payload = p;
    }
    return e;
  }
  if (tag == "s" || tag == "f") {
    auto v = parse_scalar_list(body);
    if (!v) return std::nullopt;
    if (tag == "s") {
      GluedElem g;
      g.soft = true;
      g.rays = *v;
      e.payload = g;
    } else {
      PresElem p;
      p.vpart = false;
      p.fn = *v;
      e.payload = p;
    }
    return e;
  }
  return std::nullopt;
}

}  // namespace cusemi
