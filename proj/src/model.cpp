#include "cusemi/model.hpp"

namespace cusemi {

std::vector<Element> CuModel::compact_window(int bound) const {
  std::vector<Element> out;
  for (const auto& e : window_elements(bound))
    if (way_below(e, e)) out.push_back(e);
  return out;
}

Element CuModel::nsum(const Element& x, long long n) const {
  if (n < 0) throw std::invalid_argument("nsum: negative multiplier");
  Element acc = zero();
  for (long long i = 0; i < n; ++i) acc = add(acc, x);
  return acc;
}

Element chain_term(const CuModel& m, const Chain& c, std::size_t n) {
  if (n < c.prefix.size()) return c.prefix[n];
  std::size_t t = n - c.prefix.size();
  if (std::holds_alternative<ChainTailConstant>(c.tail)) {
    if (c.prefix.empty()) throw std::invalid_argument("chain: constant tail needs a prefix");
    return c.prefix.back();
  }
  if (const auto* ramp = std::get_if<ChainTailRamp>(&c.tail))
    return m.ramp_term(ramp->start, ramp->target, t);
  return std::get<ChainTailFormula>(c.tail).term(t);
}

Element sup_chain(const CuModel& m, const Chain& c) {
  // Reject visibly non-increasing data; tails are increasing by construction
  // for constant/ramp rules, sampled for formula tails.
  for (std::size_t i = 0; i + 1 < c.prefix.size(); ++i)
    if (!m.leq(c.prefix[i], c.prefix[i + 1]))
      throw std::invalid_argument("chain: prefix is not increasing");
  if (std::holds_alternative<ChainTailConstant>(c.tail)) {
    if (c.prefix.empty()) throw std::invalid_argument("chain: constant tail needs a prefix");
    return c.prefix.back();
  }
  if (const auto* ramp = std::get_if<ChainTailRamp>(&c.tail)) {
    if (!m.leq(ramp->start, ramp->target))
      throw std::invalid_argument("chain: ramp start not below target");
    if (!c.prefix.empty() && !m.leq(c.prefix.back(), m.ramp_term(ramp->start, ramp->target, 0)))
      throw std::invalid_argument("chain: prefix does not connect to tail");
    return ramp->target;
  }
  const auto& f = std::get<ChainTailFormula>(c.tail);
  Element prev = f.term(0);
  for (std::size_t i = 1; i < 8; ++i) {
    Element cur = f.term(i);
    if (!m.leq(prev, cur)) throw std::invalid_argument("chain: formula tail is not increasing");
    if (!m.leq(cur, f.declared_sup))
      throw std::invalid_argument("chain: formula tail exceeds declared sup");
    prev = cur;
  }
  return f.declared_sup;
}

Chain constant_chain(const Element& x) {
  Chain c;
  c.prefix = {x};
  c.tail = ChainTailConstant{};
  return c;
}

Chain ramp_chain(const Element& start, const Element& target) {
  // No prefix: term(n) = ramp_term(start, target, n), so consecutive terms
  // advance from index 0 on (a duplicated start is not way-below itself for
  // soft carriers).
  Chain c;
  c.tail = ChainTailRamp{start, target};
  return c;
}

}  // namespace cusemi
