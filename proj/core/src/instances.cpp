#include "wzt/instances.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "wzt/direct_powers.hpp"
#include "wzt/pure_braid.hpp"

namespace wzt {

namespace {

struct Unit {
  bool operator==(const Unit&) const = default;
};

void require_degree(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Trivial groups (Thompson's F)

Element TrivialSystem::identity(int degree) const {
  require_degree(degree);
  return Element(Unit{});
}
Element TrivialSystem::multiply(int degree, const Element&, const Element&) const {
  return identity(degree);
}
Element TrivialSystem::invert(int degree, const Element&) const { return identity(degree); }
bool TrivialSystem::equal(int, const Element&, const Element&) const { return true; }
Permutation TrivialSystem::rho(int degree, const Element&) const {
  return Permutation::identity(degree);
}
Element TrivialSystem::clone(int degree, int k, const Element&) const {
  if (k < 1 || k > degree) throw std::invalid_argument("clone: strand index out of range");
  return identity(degree + 1);
}
Ordering TrivialSystem::compare(int, const Element&, const Element&) const {
  return Ordering::equal;
}
std::string TrivialSystem::to_text(int, const Element&) const { return "1"; }
Element TrivialSystem::parse(int degree, std::string_view text) const {
  std::string_view t = trim(text);
  if (!t.empty() && t != "1")
    throw std::invalid_argument("trivial-group element must be '1'");
  return identity(degree);
}
Element TrivialSystem::random_element(int degree, int, RandomGen&) const {
  return identity(degree);
}

// ---------------------------------------------------------------------------
// Symmetric groups (Thompson's V)

namespace {
const Permutation& perm_of(int degree, const Element& g) {
  const Permutation& p = g.as<Permutation>();
  if (p.degree() != degree) throw std::invalid_argument("permutation degree mismatch");
  return p;
}
}  // namespace

Element SymmetricSystem::identity(int degree) const {
  require_degree(degree);
  return Element(Permutation::identity(degree));
}
Element SymmetricSystem::multiply(int degree, const Element& g, const Element& h) const {
  // Diagram order: g acts first, then h.
  return Element(compose(perm_of(degree, h), perm_of(degree, g)));
}
Element SymmetricSystem::invert(int degree, const Element& g) const {
  return Element(wzt::invert(perm_of(degree, g)));
}
bool SymmetricSystem::equal(int degree, const Element& g, const Element& h) const {
  return perm_of(degree, g) == perm_of(degree, h);
}
Permutation SymmetricSystem::rho(int degree, const Element& g) const {
  return perm_of(degree, g);
}
Element SymmetricSystem::clone(int degree, int k, const Element& g) const {
  return Element(sigma_expand(perm_of(degree, g), k));
}
Ordering SymmetricSystem::compare(int, const Element&, const Element&) const {
  throw std::logic_error("the symmetric-group instance carries no left order");
}
std::string SymmetricSystem::to_text(int degree, const Element& g) const {
  return perm_of(degree, g).to_text();
}
Element SymmetricSystem::parse(int degree, std::string_view text) const {
  Permutation p = Permutation::parse(text);
  if (p.degree() != degree) throw std::invalid_argument("permutation degree mismatch");
  return Element(std::move(p));
}
Element SymmetricSystem::random_element(int degree, int, RandomGen& gen) const {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i + 1;
  for (int i = degree - 1; i > 0; --i) {
    int j = gen.uniform_int(0, i);
    std::swap(im[static_cast<size_t>(i)], im[static_cast<size_t>(j)]);
  }
  return Element(Permutation(std::move(im)));
}

// ---------------------------------------------------------------------------
// Braid groups (braided Thompson group BV)

namespace {
const BraidWord& braid_of(int degree, const Element& g) {
  const BraidWord& w = g.as<BraidWord>();
  if (w.strands() != degree) throw std::invalid_argument("braid strand count mismatch");
  return w;
}

BraidWord random_braid_word(int strands, int size_bound, RandomGen& gen) {
  if (strands < 2) return BraidWord::identity(strands);
  int length = gen.geometric_length(12, std::max(0, size_bound));
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i)
    letters.push_back(BraidLetter{gen.uniform_int(1, strands - 1), gen.coin() ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}
}  // namespace

Element BraidSystem::identity(int degree) const {
  require_degree(degree);
  return Element(BraidWord::identity(degree));
}
Element BraidSystem::multiply(int degree, const Element& g, const Element& h) const {
  return Element(concat(braid_of(degree, g), braid_of(degree, h)));
}
Element BraidSystem::invert(int degree, const Element& g) const {
  return Element(wzt::invert(braid_of(degree, g)));
}
bool BraidSystem::equal(int degree, const Element& g, const Element& h) const {
  return equal_braids(braid_of(degree, g), braid_of(degree, h));
}
Permutation BraidSystem::rho(int degree, const Element& g) const {
  return braid_permutation(braid_of(degree, g));
}
Element BraidSystem::clone(int degree, int k, const Element& g) const {
  return Element(clone_braid(degree, k, braid_of(degree, g)));
}
Ordering BraidSystem::compare(int degree, const Element& g, const Element& h) const {
  return dehornoy_compare(braid_of(degree, g), braid_of(degree, h));
}
std::string BraidSystem::to_text(int degree, const Element& g) const {
  return braid_of(degree, g).to_text();
}
Element BraidSystem::parse(int degree, std::string_view text) const {
  BraidWord w = BraidWord::parse(text);
  if (w.strands() != degree) throw std::invalid_argument("braid strand count mismatch");
  return Element(std::move(w));
}
Element BraidSystem::random_element(int degree, int size_bound, RandomGen& gen) const {
  return Element(random_braid_word(degree, size_bound, gen));
}

// ---------------------------------------------------------------------------
// Pure braid groups (pure braided Thompson group BF)

Element PureBraidSystem::identity(int degree) const {
  require_degree(degree);
  return Element(BraidWord::identity(degree));
}
Element PureBraidSystem::multiply(int degree, const Element& g, const Element& h) const {
  return Element(concat(braid_of(degree, g), braid_of(degree, h)));
}
Element PureBraidSystem::invert(int degree, const Element& g) const {
  return Element(wzt::invert(braid_of(degree, g)));
}
bool PureBraidSystem::equal(int degree, const Element& g, const Element& h) const {
  return equal_braids(braid_of(degree, g), braid_of(degree, h));
}
Permutation PureBraidSystem::rho(int degree, const Element& g) const {
  braid_of(degree, g);
  return Permutation::identity(degree);  // trivial projection by construction
}
Element PureBraidSystem::clone(int degree, int k, const Element& g) const {
  return Element(clone_braid(degree, k, braid_of(degree, g)));
}
Ordering PureBraidSystem::compare(int degree, const Element& g, const Element& h) const {
  return purebraid_compare(braid_of(degree, g), braid_of(degree, h));
}
std::string PureBraidSystem::to_text(int degree, const Element& g) const {
  return braid_of(degree, g).to_text();
}
Element PureBraidSystem::parse(int degree, std::string_view text) const {
  BraidWord w = BraidWord::parse(text);
  if (w.strands() != degree) throw std::invalid_argument("braid strand count mismatch");
  if (!is_pure(w))
    throw std::invalid_argument("the pure-braid instance only accepts pure words");
  return Element(std::move(w));
}
Element PureBraidSystem::random_element(int degree, int size_bound, RandomGen& gen) const {
  // Random product of band generators keeps the word pure by construction.
  if (degree < 2) return identity(degree);
  int count = gen.geometric_length(3, std::max(0, size_bound / 4));
  BraidWord w = BraidWord::identity(degree);
  for (int t = 0; t < count; ++t) {
    int j = gen.uniform_int(2, degree);
    int i = gen.uniform_int(1, j - 1);
    BraidWord band = band_generator(degree, i, j);
    if (gen.coin()) band = wzt::invert(band);
    w = concat(w, band);
  }
  return Element(std::move(w));
}

// ---------------------------------------------------------------------------
// Registry

const TrivialSystem& f_system() {
  static const TrivialSystem sys;
  return sys;
}
const SymmetricSystem& v_system() {
  static const SymmetricSystem sys;
  return sys;
}
const BraidSystem& bv_system() {
  static const BraidSystem sys;
  return sys;
}
const PureBraidSystem& bf_system() {
  static const PureBraidSystem sys;
  return sys;
}

namespace {

const IntPowerSystem& dirpow_instance(std::string_view params) {
  // params: "" | "int" | "int:phi1=<endo>,phi2=<endo>"
  PowerEndo phi1 = PowerEndo::identity;
  PowerEndo phi2 = PowerEndo::identity;
  std::string_view rest = params;
  if (!rest.empty()) {
    size_t colon = rest.find(':');
    std::string_view base = colon == std::string_view::npos ? rest : rest.substr(0, colon);
    if (base != "int")
      throw std::invalid_argument("dirpow: unknown base group '" + std::string(base) +
                                  "' (only 'int' is shipped)");
    if (colon != std::string_view::npos) {
      std::string_view params = rest.substr(colon + 1);
      while (!params.empty()) {
        size_t comma = params.find(',');
        std::string_view item =
            comma == std::string_view::npos ? params : params.substr(0, comma);
        params = comma == std::string_view::npos ? std::string_view{}
                                                 : params.substr(comma + 1);
        size_t eq = item.find('=');
        if (eq == std::string_view::npos)
          throw std::invalid_argument("dirpow: expected phi1=<endo>,phi2=<endo>");
        std::string_view key = trim(item.substr(0, eq));
        std::string_view value = trim(item.substr(eq + 1));
        if (key == "phi1")
          phi1 = parse_endo(value);
        else if (key == "phi2")
          phi2 = parse_endo(value);
        else
          throw std::invalid_argument("dirpow: unknown parameter '" + std::string(key) + "'");
      }
    }
  }
  static std::mutex mutex;
  static std::map<std::pair<PowerEndo, PowerEndo>, std::unique_ptr<IntPowerSystem>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{phi1, phi2}];
  if (!slot) slot = std::make_unique<IntPowerSystem>(phi1, phi2);
  return *slot;
}

}  // namespace

const CloningSystem& find_instance(std::string_view name) {
  std::string_view n = trim(name);
  if (n == "f") return f_system();
  if (n == "v") return v_system();
  if (n == "bv") return bv_system();
  if (n == "bf") return bf_system();
  if (n == "dirpow") return dirpow_instance("");
  if (n.rfind("dirpow:", 0) == 0) return dirpow_instance(n.substr(7));
  throw std::invalid_argument("unknown instance '" + std::string(name) +
                              "' (expected f, v, bv, bf or dirpow[:int:phi1=...,phi2=...])");
}

std::vector<std::string> instance_names() {
  return {"f", "v", "bv", "bf", "dirpow"};
}

}  // namespace wzt
