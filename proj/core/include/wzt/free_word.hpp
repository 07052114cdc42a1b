#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wzt {

struct FreeLetter {
  int index;  // generator index, 1..rank
  int sign;   // +1 or -1
  bool operator==(const FreeLetter&) const = default;
};

/// Word in the free group of the given rank. Letters are stored as written;
/// two words represent the same element iff their free reductions coincide.
/// Text form: "f3: x1 x2^-1" (exponents expand into repeated letters,
/// the empty word prints as "1").
class FreeWord {
 public:
  FreeWord() : rank_(0) {}
  FreeWord(int rank, std::vector<FreeLetter> letters);

  static FreeWord identity(int rank) { return FreeWord(rank, {}); }
  static FreeWord generator(int rank, int index, int sign = 1) {
    return FreeWord(rank, {FreeLetter{index, sign}});
  }

  int rank() const { return rank_; }
  const std::vector<FreeLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const FreeWord&) const = default;

  std::string to_text() const;
  static FreeWord parse(std::string_view text);

 private:
  int rank_;
  std::vector<FreeLetter> letters_;
};

/// Appends a letter with free cancellation against the current tail.
void push_reduced(std::vector<FreeLetter>& letters, FreeLetter l);

FreeWord free_reduce(const FreeWord& w);
FreeWord invert(const FreeWord& w);
FreeWord concat(const FreeWord& u, const FreeWord& v);  // group product, u first

/// Equality of elements: reductions coincide.
bool equivalent(const FreeWord& u, const FreeWord& v);

}  // namespace wzt
