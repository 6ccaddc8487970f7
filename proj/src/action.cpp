#include "tonal/action.hpp"

namespace tonal {

Translation operator+(Translation s, Translation t) {
  return Translation(s.a + t.a, s.b + t.b);
}

DayName apply(Translation t, DayName n) {
  return DayName(t.a + n.numeral, t.b + n.sign);
}

DayNumber act_on_day(Translation t, DayNumber x) {
  return iota(apply(t, ell(x)));
}

DayNumber shift_amount(Translation t) { return iota(DayName(t.a, t.b)); }

Translation solve_translation(DayName from, DayName to) {
  return Translation(to.numeral - from.numeral, to.sign - from.sign);
}

Orbit orbit(Translation t, DayName seed) {
  Orbit o{seed, t, {seed}};
  for (DayName cur = apply(t, seed); cur != seed; cur = apply(t, cur)) {
    o.elements.push_back(cur);
  }
  return o;
}

std::vector<int> orbit_restrict(const Orbit& o, Coordinate c) {
  std::vector<int> out;
  out.reserve(o.elements.size());
  for (const DayName& n : o.elements) {
    out.push_back(c == Coordinate::Numeral ? n.numeral : n.sign);
  }
  return out;
}

}  // namespace tonal
