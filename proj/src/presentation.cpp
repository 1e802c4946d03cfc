#include "cusemi/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace cusemi {

namespace {

bool is_integral(const ExtScalar& s) { return s.is_infinite() || s.finite_value().is_integer(); }

bool table_finite(const ScalarVec& f) {
  return std::all_of(f.begin(), f.end(), [](const ExtScalar& s) { return s.is_finite(); });
}

bool table_leq(const ScalarVec& f, const ScalarVec& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (g[i] < f[i]) return false;
  return true;
}

bool table_all(const ScalarVec& f, const ExtScalar& c) {
  return std::all_of(f.begin(), f.end(), [&](const ExtScalar& s) { return s == c; });
}

}  // namespace

PresentationModel::PresentationModel(Kind kind)
    : CuModel(kind == Kind::R2 ? "P:r2" : "P:sph",
              kind == Kind::R2 ? "r2-presentation" : "sphere-presentation"),
      kind_(kind),
      poset_(kind == Kind::R2 ? FinitePoset::pointed_antichain(2) : FinitePoset::lambda()) {}

std::shared_ptr<const PresentationModel> PresentationModel::r2() {
  return std::shared_ptr<const PresentationModel>(new PresentationModel(Kind::R2));
}

std::shared_ptr<const PresentationModel> PresentationModel::sphere() {
  return std::shared_ptr<const PresentationModel>(new PresentationModel(Kind::Sphere));
}

long long PresentationModel::glue_rank(const std::vector<long long>& v) const {
  return kind_ == Kind::R2 ? 0 : v[0];
}

bool PresentationModel::valid_class(const std::vector<long long>& v) const {
  if (kind_ == Kind::R2) return v.size() == 1;
  if (v.size() != 2) return false;
  return v[0] >= 1 || (v[0] == 0 && v[1] == 0);
}

bool PresentationModel::valid_table(const ScalarVec& f) const {
  if (static_cast<int>(f.size()) != poset_.size()) return false;
  for (const ExtScalar& s : f)
    if (!is_integral(s)) return false;
  if (kind_ == Kind::R2) {
    return f[static_cast<std::size_t>(*poset_.basepoint())] == ExtScalar(0);
  }
  for (const ExtScalar& s : f)
    if (s < ExtScalar(0)) return false;
  for (const auto& [a, b] : poset_.covers())
    if (f[static_cast<std::size_t>(b)] < f[static_cast<std::size_t>(a)]) return false;
  return true;
}

Element PresentationModel::vclass(std::vector<long long> v) const {
  if (!valid_class(v)) throw std::invalid_argument(name() + ": malformed class data");
  PresElem p;
  p.vpart = true;
  p.v = std::move(v);
  return Element{sig(), p};
}

Element PresentationModel::table(ScalarVec f) const {
  if (!valid_table(f)) throw std::invalid_argument(name() + ": malformed table data");
  if (kind_ == Kind::R2) {
    if (table_all(f, ExtScalar(0))) return vclass({0});
  } else if (table_finite(f) && table_all(f, f[0])) {
    return vclass({f[0].finite_value().num(), 0});
  }
  PresElem p;
  p.fn = std::move(f);
  return Element{sig(), p};
}

Element PresentationModel::canonical(const Element& e) const {
  check_sig(e);
  const PresElem& p = e.pres();
  if (p.vpart) return e;
  if (kind_ == Kind::R2) {
    if (table_all(p.fn, ExtScalar(0))) return vclass({0});
  } else if (table_finite(p.fn) && table_all(p.fn, p.fn[0])) {
    return vclass({p.fn[0].finite_value().num(), 0});
  }
  return e;
}

bool PresentationModel::declared_soft(const Element& e) const {
  return !canonical(e).pres().vpart;
}

Element PresentationModel::zero() const {
  return kind_ == Kind::R2 ? vclass({0}) : vclass({0, 0});
}

bool PresentationModel::leq(const Element& a0, const Element& b0) const {
  Element a = canonical(a0);
  Element b = canonical(b0);
  const PresElem& pa = a.pres();
  const PresElem& pb = b.pres();
  if (pa.vpart && pb.vpart) {
    if (pa.v == pb.v) return true;
    return kind_ == Kind::Sphere && pa.v[0] < pb.v[0];
  }
  if (pa.vpart) {
    // A class sits below a table when the table dominates its glue rank
    // everywhere (for r2 the rank is 0 and the canonical table is nonzero).
    ExtScalar r{glue_rank(pa.v)};
    return std::all_of(pb.fn.begin(), pb.fn.end(), [&](const ExtScalar& s) { return r <= s; });
  }
  if (pb.vpart) {
    ExtScalar r{glue_rank(pb.v)};
    return std::all_of(pa.fn.begin(), pa.fn.end(), [&](const ExtScalar& s) { return s <= r; });
  }
  return table_leq(pa.fn, pb.fn);
}

Element PresentationModel::add(const Element& a0, const Element& b0) const {
  Element a = canonical(a0);
  Element b = canonical(b0);
  const PresElem& pa = a.pres();
  const PresElem& pb = b.pres();
  if (pa.vpart && pb.vpart) {
    std::vector<long long> s(pa.v.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = pa.v[i] + pb.v[i];
    return vclass(std::move(s));
  }
  if (pa.vpart || pb.vpart) {
    const PresElem& cls = pa.vpart ? pa : pb;
    const PresElem& tab = pa.vpart ? pb : pa;
    ExtScalar r{glue_rank(cls.v)};
    ScalarVec s(tab.fn.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = r + tab.fn[i];
    return table(std::move(s));
  }
  ScalarVec s(pa.fn.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = pa.fn[i] + pb.fn[i];
  return table(std::move(s));
}

bool PresentationModel::way_below(const Element& a0, const Element& b0) const {
  Element a = canonical(a0);
  if (a.pres().vpart) return leq(a, b0);
  return table_finite(a.pres().fn) && leq(a, b0);
}

Element PresentationModel::ramp_term(const Element& start, const Element& target,
                                     std::size_t m) const {
  Element t = canonical(target);
  if (t.pres().vpart) return t;
  const ScalarVec& tf = t.pres().fn;
  Element s0 = canonical(start);
  ScalarVec sf;
  if (s0.pres().vpart)
    sf.assign(tf.size(), ExtScalar(glue_rank(s0.pres().v)));
  else
    sf = s0.pres().fn;
  ExtScalar step{static_cast<long long>(m)};
  ScalarVec out(tf.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (sf[i].is_infinite())
      out[i] = tf[i];
    else if (tf[i].is_infinite())
      out[i] = sf[i] + step;
    else
      out[i] = ExtScalar::min(tf[i], sf[i] + step);
  }
  return table(std::move(out));
}

Chain PresentationModel::approximant_chain(const Element& x) const {
  Element xc = canonical(x);
  const PresElem& p = xc.pres();
  if (p.vpart || table_finite(p.fn)) return constant_chain(xc);
  ScalarVec s(p.fn.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    s[i] = p.fn[i].is_finite() ? p.fn[i] : ExtScalar(0);
  // Close the start table upward along the poset so it stays a valid table.
  for (int pass = 0; pass < poset_.size(); ++pass)
    for (const auto& [a, b] : poset_.covers())
      s[static_cast<std::size_t>(b)] =
          ExtScalar::max(s[static_cast<std::size_t>(b)], s[static_cast<std::size_t>(a)]);
  return ramp_chain(table(std::move(s)), xc);
}

std::vector<Element> PresentationModel::window_elements(int bound) const {
  std::vector<Element> out;
  std::vector<ExtScalar> vals;
  if (kind_ == Kind::R2) {
    for (long long n = -bound; n <= bound; ++n) out.push_back(vclass({n}));
    for (long long v = -bound; v <= bound; ++v) vals.emplace_back(v);
    vals.push_back(ExtScalar::infinity());
    for (const ExtScalar& a : vals)
      for (const ExtScalar& b : vals) {
        if (a == ExtScalar(0) && b == ExtScalar(0)) continue;  // the zero table is v(0)
        out.push_back(table({a, b, ExtScalar(0)}));
      }
    return out;
  }
  out.push_back(vclass({0, 0}));
  for (long long r = 1; r <= bound; ++r)
    for (long long c = -bound; c <= bound; ++c) out.push_back(vclass({r, c}));
  for (long long v = 0; v <= bound; ++v) vals.emplace_back(v);
  vals.push_back(ExtScalar::infinity());
  for (const ExtScalar& a : vals)
    for (const ExtScalar& b : vals)
      for (const ExtScalar& c : vals) {
        if (a.is_finite() && a == b && b == c) continue;  // finite constants are classes
        if (c < a || c < b) continue;
        out.push_back(table({a, b, c}));
      }
  return out;
}

std::optional<Element> PresentationModel::order_unit() const {
  if (kind_ == Kind::R2) return std::nullopt;  // Z admits no common upper bound
  return vclass({1, 0});
}

std::optional<Element> PresentationModel::max_element() const {
  ScalarVec top(static_cast<std::size_t>(poset_.size()), ExtScalar::infinity());
  if (kind_ == Kind::R2) top[static_cast<std::size_t>(*poset_.basepoint())] = ExtScalar(0);
  return table(std::move(top));
}

std::optional<Element> PresentationModel::sup_of_multiples(const Element& x) const {
  Element xc = canonical(x);
  if (xc == zero()) return zero();
  const PresElem& p = xc.pres();
  if (p.vpart) {
    if (kind_ == Kind::R2) return std::nullopt;  // nonzero classes are not positive
    return max_element();
  }
  ScalarVec s(p.fn.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (p.fn[i] < ExtScalar(0)) return std::nullopt;
    s[i] = p.fn[i] == ExtScalar(0) ? ExtScalar(0) : ExtScalar::infinity();
  }
  return table(std::move(s));
}

DecideAnswer PresentationModel::o5_decide(const Element& xp0, const Element& x0, const Element& y0,
                                          const Element& w0, const Element& wp0) const {
  (void)w0;
  Element xp = canonical(xp0);
  Element x = canonical(x0);
  Element y = canonical(y0);
  Element wp = canonical(wp0);
  // Only the rigid configuration x' = x is decided in closed form: then
  // x' + z <= y <= x + z pins x + z = y exactly, so the solution set for z is
  // forced and the w'-gate can be checked against it.
  if (!(xp == x)) return DecideAnswer::undecided();
  auto verify = [&](const Element& z) {
    return leq(add(xp, z), y) && leq(y, add(x, z)) && way_below(wp, z);
  };
  const PresElem& px = x.pres();
  const PresElem& py = y.pres();
  const PresElem& pw = wp.pres();
  std::vector<Element> cands;
  auto push_class = [&](std::vector<long long> v) {
    if (valid_class(v)) cands.push_back(vclass(std::move(v)));
  };
  auto push_table = [&](ScalarVec f) {
    if (valid_table(f)) cands.push_back(table(std::move(f)));
  };
  if (px.vpart && py.vpart) {
    // Classes are cancellative, so z is the class difference or nothing.
    std::vector<long long> d(px.v.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = py.v[i] - px.v[i];
    push_class(std::move(d));
  } else if (px.vpart) {
    // class + z = table: z must be the table shifted down by the glue rank.
    ExtScalar r{glue_rank(px.v)};
    ScalarVec h(py.fn.size());
    bool ok = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (py.fn[i].is_infinite()) {
        h[i] = ExtScalar::infinity();
      } else if (py.fn[i] < r) {
        ok = false;
        break;
      } else {
        h[i] = py.fn[i] - r;
      }
    }
    if (ok) push_table(std::move(h));
  } else if (py.vpart) {
    // table + z = class: only the r2 identification f + (-f) = v(0) can fire.
    if (kind_ == Kind::R2 && py.v[0] == 0 && table_finite(px.fn)) {
      ScalarVec h(px.fn.size());
      for (std::size_t i = 0; i < h.size(); ++i) h[i] = -px.fn[i];
      push_table(std::move(h));
    }
  } else {
    // table + z = table: the table solution is the pointwise difference, with
    // infinite target entries left infinite (maximal choice on free spots).
    ScalarVec h(py.fn.size());
    bool ok = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (py.fn[i].is_infinite()) {
        h[i] = ExtScalar::infinity();
      } else if (px.fn[i].is_infinite() ||
                 (kind_ == Kind::Sphere && py.fn[i] < px.fn[i])) {
        ok = false;
        break;
      } else {
        h[i] = py.fn[i] - px.fn[i];
      }
    }
    if (ok) push_table(std::move(h));
    // Class solutions need the tables to differ by a constant glue rank.
    bool const_diff = true;
    std::optional<long long> shift;
    for (std::size_t i = 0; i < py.fn.size(); ++i) {
      if (px.fn[i].is_infinite() != py.fn[i].is_infinite()) {
        const_diff = false;
        break;
      }
      if (px.fn[i].is_infinite()) continue;
      long long d = (py.fn[i] - px.fn[i]).finite_value().num();
      if (shift && *shift != d) {
        const_diff = false;
        break;
      }
      shift = d;
    }
    if (const_diff) {
      if (!shift) {
        // Both tables are all-infinite: any class works, so aim at w'.
        if (pw.vpart)
          push_class(kind_ == Kind::R2 ? std::vector<long long>{pw.v[0]}
                                       : std::vector<long long>{pw.v[0] + 1, 0});
        else {
          long long top = 0;
          for (const ExtScalar& s : pw.fn)
            if (s.is_finite()) top = std::max(top, s.finite_value().num());
          push_class(kind_ == Kind::R2 ? std::vector<long long>{0}
                                       : std::vector<long long>{top + 1, 0});
        }
      } else if (kind_ == Kind::R2) {
        // r2 absorption f + v(n) = f puts every class in the solution set.
        push_class({0});
        if (pw.vpart) push_class({pw.v[0]});
      } else {
        push_class({*shift, 0});
        if (pw.vpart) push_class({*shift, pw.v[1]});
      }
    }
  }
  for (const Element& z : cands)
    if (verify(z)) return DecideAnswer::found(z);
  return DecideAnswer::none(
      "with x' = x the sandwich forces x + z = y, and no solution of that "
      "equation admits w' way below it");
}

}  // namespace cusemi
