#include "wzt/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace wzt {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("braid word needs at least one strand");
  for (const BraidLetter& l : letters_) {
    if (l.index < 1 || l.index >= strands)
      throw std::invalid_argument("braid letter index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("braid letter sign must be +1 or -1");
  }
}

BraidWord invert(const BraidWord& w) {
  std::vector<BraidLetter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(BraidLetter{it->index, -it->sign});
  return BraidWord(w.strands(), std::move(out));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("concat: strand count mismatch");
  std::vector<BraidLetter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(out));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> out;
  out.reserve(w.letters().size());
  for (const BraidLetter& l : w.letters()) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.strands(), std::move(out));
}

Permutation braid_permutation(const BraidWord& w) {
  std::vector<int> im(static_cast<size_t>(w.strands()));
  for (int m = 1; m <= w.strands(); ++m) {
    int pos = m;
    for (const BraidLetter& l : w.letters()) {
      if (pos == l.index)
        pos = l.index + 1;
      else if (pos == l.index + 1)
        pos = l.index;
    }
    im[static_cast<size_t>(m) - 1] = pos;
  }
  return Permutation(std::move(im));
}

long default_step_budget() {
  static const long budget = [] {
    if (const char* env = std::getenv("WZT_STEP_BUDGET")) {
      long value = std::atol(env);
      if (value > 0) return value;
    }
    return 1000000L;
  }();
  return budget;
}

namespace {

struct HandlePos {
  size_t open;   // index of s_i^e
  size_t close;  // index of s_i^{-e}
};

// Leftmost-closing handle: smallest close position such that the previous
// occurrence of the same generator index has opposite sign and no letter of
// index i-1 lies between them. The previous occurrence being the nearest one
// makes the interior free of index i automatically, so the found handle is
// innermost.
bool find_handle(const std::vector<BraidLetter>& letters, int strands, HandlePos& out) {
  std::vector<ptrdiff_t> last(static_cast<size_t>(strands), -1);
  for (size_t q = 0; q < letters.size(); ++q) {
    const int i = letters[q].index;
    const ptrdiff_t p = last[static_cast<size_t>(i)];
    if (p >= 0 && letters[static_cast<size_t>(p)].sign == -letters[q].sign) {
      const ptrdiff_t below = i >= 2 ? last[static_cast<size_t>(i) - 1] : -1;
      if (below < p) {
        out = HandlePos{static_cast<size_t>(p), q};
        return true;
      }
    }
    last[static_cast<size_t>(i)] = static_cast<ptrdiff_t>(q);
  }
  return false;
}

}  // namespace

bool has_handle(const BraidWord& w) {
  HandlePos h;
  return find_handle(w.letters(), w.strands(), h);
}

BraidWord handle_reduce(const BraidWord& w, long step_budget) {
  std::vector<BraidLetter> cur = free_reduce(w).letters();
  long steps = 0;
  HandlePos h;
  while (find_handle(cur, w.strands(), h)) {
    if (++steps > step_budget)
      throw std::runtime_error("handle_reduce: step budget exceeded (internal error)");
    const int i = cur[h.open].index;
    const int e = cur[h.open].sign;
    std::vector<BraidLetter> next;
    next.reserve(cur.size() + 2 * (h.close - h.open));
    next.insert(next.end(), cur.begin(), cur.begin() + static_cast<ptrdiff_t>(h.open));
    for (size_t t = h.open + 1; t < h.close; ++t) {
      const BraidLetter& l = cur[t];
      if (l.index == i + 1) {
        // s_{i+1}^d becomes s_{i+1}^{-e} s_i^d s_{i+1}^{e}.
        next.push_back(BraidLetter{i + 1, -e});
        next.push_back(BraidLetter{i, l.sign});
        next.push_back(BraidLetter{i + 1, e});
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), cur.begin() + static_cast<ptrdiff_t>(h.close) + 1, cur.end());
    cur = free_reduce(BraidWord(w.strands(), std::move(next))).letters();
  }
  return BraidWord(w.strands(), std::move(cur));
}

Sign sigma_positivity(const BraidWord& w, long step_budget) {
  BraidWord r = handle_reduce(w, step_budget);
  if (r.empty()) return Sign::zero;
  int lowest = r.strands();
  for (const BraidLetter& l : r.letters()) lowest = std::min(lowest, l.index);
  // Handle-freeness guarantees the lowest index occurs with a single sign.
  for (const BraidLetter& l : r.letters())
    if (l.index == lowest) return l.sign > 0 ? Sign::positive : Sign::negative;
  return Sign::zero;  // unreachable
}

Ordering dehornoy_compare(const BraidWord& a, const BraidWord& b, long step_budget) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("dehornoy_compare: strand count mismatch");
  return ordering_from_difference_sign(sigma_positivity(concat(invert(a), b), step_budget));
}

FreeWord artin_act(const BraidWord& w, const FreeWord& x) {
  if (x.rank() != w.strands())
    throw std::invalid_argument("artin_act: free word rank must equal strand count");
  std::vector<FreeLetter> cur = free_reduce(x).letters();
  for (const BraidLetter& l : w.letters()) {
    const int i = l.index;
    std::vector<FreeLetter> next;
    next.reserve(cur.size() * 2);
    auto apply = [&](const FreeLetter& f) {
      // Image of the single letter f under the substitution for s_i^{sign}.
      if (l.sign > 0) {
        if (f.index == i) {
          if (f.sign > 0) {
            push_reduced(next, {i, 1});
            push_reduced(next, {i + 1, 1});
            push_reduced(next, {i, -1});
          } else {
            push_reduced(next, {i, 1});
            push_reduced(next, {i + 1, -1});
            push_reduced(next, {i, -1});
          }
        } else if (f.index == i + 1) {
          push_reduced(next, {i, f.sign});
        } else {
          push_reduced(next, f);
        }
      } else {
        if (f.index == i) {
          push_reduced(next, {i + 1, f.sign});
        } else if (f.index == i + 1) {
          if (f.sign > 0) {
            push_reduced(next, {i + 1, -1});
            push_reduced(next, {i, 1});
            push_reduced(next, {i + 1, 1});
          } else {
            push_reduced(next, {i + 1, -1});
            push_reduced(next, {i, -1});
            push_reduced(next, {i + 1, 1});
          }
        } else {
          push_reduced(next, f);
        }
      }
    };
    for (const FreeLetter& f : cur) apply(f);
    cur = std::move(next);
  }
  return FreeWord(x.rank(), std::move(cur));
}

bool equal_braids(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) return false;
  const int n = u.strands();
  for (int i = 1; i <= n; ++i) {
    FreeWord gen = FreeWord::generator(n, i);
    if (artin_act(u, gen) != artin_act(v, gen)) return false;
  }
  return true;
}

BraidWord clone_braid(int strands, int k, const BraidWord& w) {
  if (w.strands() != strands)
    throw std::invalid_argument("clone_braid: strand count mismatch");
  if (k < 1 || k > strands)
    throw std::invalid_argument("clone_braid: strand index out of range");
  auto positive_image = [](int i, int j, std::vector<BraidLetter>& out) {
    // Image of s_i at threaded index j.
    if (j < i) {
      out.push_back(BraidLetter{i + 1, 1});
    } else if (j == i) {
      out.push_back(BraidLetter{i + 1, 1});
      out.push_back(BraidLetter{i, 1});
    } else if (j == i + 1) {
      out.push_back(BraidLetter{i, 1});
      out.push_back(BraidLetter{i + 1, 1});
    } else {
      out.push_back(BraidLetter{i, 1});
    }
  };
  std::vector<BraidLetter> out;
  out.reserve(w.letters().size() * 2);
  int idx = k;
  for (const BraidLetter& l : w.letters()) {
    const int i = l.index;
    const int moved = idx == i ? i + 1 : (idx == i + 1 ? i : idx);
    if (l.sign > 0) {
      positive_image(i, idx, out);
    } else {
      // s_i^{-1} at index j maps to the inverse of the image of s_i at the
      // transposed index.
      std::vector<BraidLetter> tmp;
      positive_image(i, moved, tmp);
      for (auto it = tmp.rbegin(); it != tmp.rend(); ++it)
        out.push_back(BraidLetter{it->index, -1});
    }
    idx = moved;
  }
  return BraidWord(strands + 1, std::move(out));
}

std::string BraidWord::to_text() const {
  std::string out = "b" + std::to_string(strands_) + ":";
  if (letters_.empty()) {
    out += " 1";
    return out;
  }
  for (const BraidLetter& l : letters_) {
    out += " s" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

namespace {

void skip_ws(std::string_view text, size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

int parse_int(std::string_view text, size_t& pos, const char* what) {
  int value = 0;
  auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc()) throw std::invalid_argument(std::string("expected ") + what);
  pos = static_cast<size_t>(next - text.data());
  return value;
}

}  // namespace

BraidWord BraidWord::parse(std::string_view text) {
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != 'b')
    throw std::invalid_argument("braid word text must start with 'b<strands>:'");
  ++pos;
  int strands = parse_int(text, pos, "strand count");
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != ':')
    throw std::invalid_argument("braid word text: expected ':' after strand count");
  ++pos;
  std::vector<BraidLetter> letters;
  for (;;) {
    skip_ws(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] == '1') {  // explicit empty word
      ++pos;
      continue;
    }
    if (text[pos] != 's')
      throw std::invalid_argument("braid word text: expected 's<index>'");
    ++pos;
    int index = parse_int(text, pos, "generator index");
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_int(text, pos, "exponent");
    }
    int sign = exponent >= 0 ? 1 : -1;
    for (int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
      letters.push_back(BraidLetter{index, sign});
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace wzt
