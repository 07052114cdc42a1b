#include "wzt/direct_powers.hpp"

#include <charconv>
#include <stdexcept>

namespace wzt {

std::int64_t apply_endo(PowerEndo e, std::int64_t v) {
  switch (e) {
    case PowerEndo::identity: return v;
    case PowerEndo::doubling: return 2 * v;
    case PowerEndo::negate: return -v;
  }
  return v;
}

std::string to_string(PowerEndo e) {
  switch (e) {
    case PowerEndo::identity: return "identity";
    case PowerEndo::doubling: return "double";
    case PowerEndo::negate: return "negate";
  }
  return "?";
}

PowerEndo parse_endo(std::string_view text) {
  if (text == "identity" || text == "id") return PowerEndo::identity;
  if (text == "double" || text == "doubling") return PowerEndo::doubling;
  if (text == "negate") return PowerEndo::negate;
  throw std::invalid_argument("unknown endomorphism '" + std::string(text) +
                              "' (expected identity or double)");
}

PowerElement power_clone(const PowerElement& t, int k, PowerEndo phi1, PowerEndo phi2) {
  const int n = t.degree();
  if (k < 1 || k > n) throw std::invalid_argument("power_clone: index out of range");
  PowerElement out;
  out.coordinates.reserve(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    if (i == k) {
      out.coordinates.push_back(apply_endo(phi1, t.coordinates[static_cast<size_t>(i) - 1]));
      out.coordinates.push_back(apply_endo(phi2, t.coordinates[static_cast<size_t>(i) - 1]));
    } else {
      out.coordinates.push_back(t.coordinates[static_cast<size_t>(i) - 1]);
    }
  }
  return out;
}

Ordering power_compare(const PowerElement& a, const PowerElement& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("power_compare: degree mismatch");
  for (int i = 0; i < a.degree(); ++i) {
    auto x = a.coordinates[static_cast<size_t>(i)];
    auto y = b.coordinates[static_cast<size_t>(i)];
    if (x < y) return Ordering::less;
    if (x > y) return Ordering::greater;
  }
  return Ordering::equal;
}

IntPowerSystem::IntPowerSystem(PowerEndo phi1, PowerEndo phi2, bool allow_order_breaking)
    : phi1_(phi1), phi2_(phi2) {
  if (!allow_order_breaking && (phi1 == PowerEndo::negate || phi2 == PowerEndo::negate))
    throw std::invalid_argument(
        "dirpow: 'negate' reverses the order of the base group and would break "
        "compatibility of the lexicographic orders with the cloning maps");
}

std::string IntPowerSystem::name() const {
  return "dirpow:int:phi1=" + to_string(phi1_) + ",phi2=" + to_string(phi2_);
}

const PowerElement& IntPowerSystem::get(int degree, const Element& g) const {
  const PowerElement& p = g.as<PowerElement>();
  if (p.degree() != degree)
    throw std::invalid_argument("power element degree mismatch");
  return p;
}

Element IntPowerSystem::identity(int degree) const {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  PowerElement p;
  p.coordinates.assign(static_cast<size_t>(degree), 0);
  return Element(std::move(p));
}

Element IntPowerSystem::multiply(int degree, const Element& g, const Element& h) const {
  const PowerElement& a = get(degree, g);
  const PowerElement& b = get(degree, h);
  PowerElement out = a;
  for (int i = 0; i < degree; ++i)
    out.coordinates[static_cast<size_t>(i)] += b.coordinates[static_cast<size_t>(i)];
  return Element(std::move(out));
}

Element IntPowerSystem::invert(int degree, const Element& g) const {
  PowerElement out = get(degree, g);
  for (auto& c : out.coordinates) c = -c;
  return Element(std::move(out));
}

bool IntPowerSystem::equal(int degree, const Element& g, const Element& h) const {
  return get(degree, g) == get(degree, h);
}

Permutation IntPowerSystem::rho(int degree, const Element& g) const {
  get(degree, g);
  return Permutation::identity(degree);
}

Element IntPowerSystem::clone(int degree, int k, const Element& g) const {
  return Element(power_clone(get(degree, g), k, phi1_, phi2_));
}

Ordering IntPowerSystem::compare(int degree, const Element& g, const Element& h) const {
  return power_compare(get(degree, g), get(degree, h));
}

std::string IntPowerSystem::to_text(int degree, const Element& g) const {
  const PowerElement& p = get(degree, g);
  std::string out = "z^" + std::to_string(degree) + ": (";
  for (int i = 0; i < degree; ++i) {
    if (i) out += ',';
    out += std::to_string(p.coordinates[static_cast<size_t>(i)]);
  }
  out += ')';
  return out;
}

Element IntPowerSystem::parse(int degree, std::string_view text) const {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == 'z') {
    // optional "z^<n>:" prefix
    ++pos;
    if (pos >= text.size() || text[pos] != '^')
      throw std::invalid_argument("power element text: expected '^' after 'z'");
    ++pos;
    int declared = 0;
    auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), declared);
    if (ec != std::errc()) throw std::invalid_argument("power element text: bad degree");
    pos = static_cast<size_t>(next - text.data());
    if (declared != degree)
      throw std::invalid_argument("power element degree mismatch");
    skip_ws();
    if (pos >= text.size() || text[pos] != ':')
      throw std::invalid_argument("power element text: expected ':'");
    ++pos;
  }
  skip_ws();
  if (pos >= text.size() || text[pos] != '(')
    throw std::invalid_argument("power element text: expected '('");
  ++pos;
  PowerElement p;
  for (;;) {
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    if (!p.coordinates.empty()) {
      if (pos >= text.size() || text[pos] != ',')
        throw std::invalid_argument("power element text: expected ','");
      ++pos;
      skip_ws();
    }
    std::int64_t value = 0;
    auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw std::invalid_argument("power element text: bad integer");
    pos = static_cast<size_t>(next - text.data());
    p.coordinates.push_back(value);
  }
  if (p.degree() != degree)
    throw std::invalid_argument("power element degree mismatch");
  return Element(std::move(p));
}

Element IntPowerSystem::random_element(int degree, int size_bound, RandomGen& gen) const {
  int bound = std::max(1, std::min(size_bound, 9));
  PowerElement p;
  p.coordinates.reserve(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i)
    p.coordinates.push_back(gen.uniform_int(-bound, bound));
  return Element(std::move(p));
}

}  // namespace wzt
