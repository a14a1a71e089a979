#ifndef BRAID3_BRAID_WORD_HPP_
#define BRAID3_BRAID_WORD_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braid3 {

// x = sigma_1 (column 1), y = sigma_2 (column 2).
enum class Generator : std::uint8_t { X = 1, Y = 2 };

struct Letter {
  Generator generator;
  int sign;  // +1 or -1

  Letter inverse() const noexcept { return {generator, -sign}; }

  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

inline constexpr Letter kX{Generator::X, +1};
inline constexpr Letter kY{Generator::Y, +1};
inline constexpr Letter kXInv{Generator::X, -1};
inline constexpr Letter kYInv{Generator::Y, -1};

// A word in x, y and their inverses. Raw input may contain cancelling pairs;
// use free_reduce for the canonical representative.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<Letter> letters)
      : _letters(std::move(letters)) {}

  std::vector<Letter> const& letters() const noexcept { return _letters; }
  std::size_t size() const noexcept { return _letters.size(); }
  bool empty() const noexcept { return _letters.empty(); }
  Letter operator[](std::size_t i) const { return _letters[i]; }

  void push_back(Letter l) { _letters.push_back(l); }
  // Appends l^power, i.e. |power| copies of l or of its inverse.
  void append_power(Letter l, std::int64_t power);
  void append(BraidWord const& other);

  friend bool operator==(BraidWord const&, BraidWord const&) = default;

 private:
  std::vector<Letter> _letters;
};

// Permutation of the strands {0,1,2}; image[i] is where strand i ends up.
struct Perm3 {
  std::array<int, 3> image{0, 1, 2};

  static Perm3 identity() noexcept { return {}; }
  // (this * other)(i) = this(other(i)).
  Perm3 compose(Perm3 const& other) const noexcept;
  int cycle_count() const noexcept;
  bool is_identity() const noexcept { return image == std::array{0, 1, 2}; }

  friend bool operator==(Perm3 const&, Perm3 const&) = default;
};

// Grammar: word := token*; token := base ('^' int)?;
// base := 'x' | 'y' | 's1' | 's2' | 'h'; int := '-'? [0-9]+.
// Throws ParseError (UnknownToken / MalformedExponent).
BraidWord parse(std::string_view text);

// Renders runs of equal letters as base^k, e.g. "x y^-4".
std::string to_string(BraidWord const& w);

std::int64_t exponent_sum(BraidWord const& w) noexcept;
BraidWord inverse(BraidWord const& w);
BraidWord concat(BraidWord const& u, BraidWord const& w);
BraidWord free_reduce(BraidWord const& w);
// Cyclic shift: the letter at position k moves to the front.
BraidWord rotate(BraidWord const& w, std::size_t k);
// (x y)^{3d} for d >= 0, (y^-1 x^-1)^{3|d|} otherwise.
BraidWord full_twist_power(std::int64_t d);

Perm3 permutation(BraidWord const& w) noexcept;
int components(BraidWord const& w) noexcept;

}  // namespace braid3

#endif  // BRAID3_BRAID_WORD_HPP_
