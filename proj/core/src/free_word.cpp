#include "wzt/free_word.hpp"

#include <charconv>
#include <stdexcept>

namespace wzt {

FreeWord::FreeWord(int rank, std::vector<FreeLetter> letters)
    : rank_(rank), letters_(std::move(letters)) {
  if (rank < 0) throw std::invalid_argument("negative free-group rank");
  for (const FreeLetter& l : letters_) {
    if (l.index < 1 || l.index > rank)
      throw std::invalid_argument("free word letter index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("free word letter sign must be +1 or -1");
  }
}

void push_reduced(std::vector<FreeLetter>& letters, FreeLetter l) {
  if (!letters.empty() && letters.back().index == l.index &&
      letters.back().sign == -l.sign) {
    letters.pop_back();
  } else {
    letters.push_back(l);
  }
}

FreeWord free_reduce(const FreeWord& w) {
  std::vector<FreeLetter> out;
  out.reserve(w.letters().size());
  for (const FreeLetter& l : w.letters()) push_reduced(out, l);
  return FreeWord(w.rank(), std::move(out));
}

FreeWord invert(const FreeWord& w) {
  std::vector<FreeLetter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(FreeLetter{it->index, -it->sign});
  return FreeWord(w.rank(), std::move(out));
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("concat: free word rank mismatch");
  std::vector<FreeLetter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return FreeWord(u.rank(), std::move(out));
}

bool equivalent(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) return false;
  return free_reduce(u).letters() == free_reduce(v).letters();
}

std::string FreeWord::to_text() const {
  std::string out = "f" + std::to_string(rank_) + ":";
  if (letters_.empty()) {
    out += " 1";
    return out;
  }
  for (const FreeLetter& l : letters_) {
    out += " x" + std::to_string(l.index);
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

FreeWord FreeWord::parse(std::string_view text) {
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != 'f')
    throw std::invalid_argument("free word text must start with 'f<rank>:'");
  ++pos;
  int rank = parse_int(text, pos, "rank");
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != ':')
    throw std::invalid_argument("free word text: expected ':' after rank");
  ++pos;
  std::vector<FreeLetter> letters;
  for (;;) {
    skip_ws(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] == '1') {  // explicit empty word
      ++pos;
      continue;
    }
    if (text[pos] != 'x')
      throw std::invalid_argument("free word text: expected 'x<index>'");
    ++pos;
    int index = parse_int(text, pos, "generator index");
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_int(text, pos, "exponent");
    }
    int sign = exponent >= 0 ? 1 : -1;
    for (int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
      letters.push_back(FreeLetter{index, sign});
  }
  return FreeWord(rank, std::move(letters));
}

}  // namespace wzt
