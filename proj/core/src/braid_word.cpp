#include "braid3/braid_word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {
// Single-token exponents beyond this are rejected as malformed rather than
// expanded into hundreds of megabytes of letters.
constexpr std::int64_t kMaxExponent = 1'000'000;

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

char base_name(Generator g) { return g == Generator::X ? 'x' : 'y'; }
}  // namespace

void BraidWord::append_power(Letter l, std::int64_t power) {
  Letter const step = power >= 0 ? l : l.inverse();
  auto const count = static_cast<std::size_t>(power >= 0 ? power : -power);
  _letters.insert(_letters.end(), count, step);
}

void BraidWord::append(BraidWord const& other) {
  _letters.insert(_letters.end(), other._letters.begin(),
                  other._letters.end());
}

Perm3 Perm3::compose(Perm3 const& other) const noexcept {
  Perm3 result;
  for (int i = 0; i < 3; ++i) {
    result.image[i] = image[other.image[i]];
  }
  return result;
}

int Perm3::cycle_count() const noexcept {
  std::array<bool, 3> seen{false, false, false};
  int cycles = 0;
  for (int i = 0; i < 3; ++i) {
    if (seen[i]) {
      continue;
    }
    ++cycles;
    for (int j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
    }
  }
  return cycles;
}

BraidWord parse(std::string_view text) {
  BraidWord word;
  std::size_t pos = 0;
  std::size_t token_index = 0;
  auto const n = text.size();

  while (true) {
    while (pos < n && is_space(text[pos])) {
      ++pos;
    }
    if (pos == n) {
      break;
    }
    ++token_index;
    std::size_t const start = pos;
    auto token_text = [&](std::size_t end) {
      return std::string(text.substr(start, end - start));
    };
    auto rest_of_token = [&]() {
      std::size_t end = start;
      while (end < n && !is_space(text[end])) {
        ++end;
      }
      return token_text(end);
    };

    enum class Base { X, Y, H } base;
    char const c = text[pos];
    if (c == 'x') {
      base = Base::X;
      ++pos;
    } else if (c == 'y') {
      base = Base::Y;
      ++pos;
    } else if (c == 'h') {
      base = Base::H;
      ++pos;
    } else if (c == 's' && pos + 1 < n &&
               (text[pos + 1] == '1' || text[pos + 1] == '2')) {
      base = text[pos + 1] == '1' ? Base::X : Base::Y;
      pos += 2;
    } else {
      throw ParseError(ErrorCode::UnknownToken, token_index, rest_of_token());
    }

    std::int64_t power = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      std::size_t digits_start = pos;
      if (pos < n && text[pos] == '-') {
        ++pos;
      }
      std::size_t const first_digit = pos;
      while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == first_digit) {
        throw ParseError(ErrorCode::MalformedExponent, token_index,
                         rest_of_token());
      }
      auto [ptr, ec] = std::from_chars(text.data() + digits_start,
                                       text.data() + pos, power);
      if (ec != std::errc() || std::llabs(power) > kMaxExponent) {
        throw ParseError(ErrorCode::MalformedExponent, token_index,
                         rest_of_token());
      }
    }

    switch (base) {
      case Base::X:
        word.append_power(kX, power);
        break;
      case Base::Y:
        word.append_power(kY, power);
        break;
      case Base::H:
        word.append(full_twist_power(power));
        break;
    }
  }
  return word;
}

std::string to_string(BraidWord const& w) {
  std::string out;
  auto const& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) {
      ++j;
    }
    auto const run = static_cast<std::int64_t>(j - i) * ls[i].sign;
    if (!out.empty()) {
      out += ' ';
    }
    out += base_name(ls[i].generator);
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

std::int64_t exponent_sum(BraidWord const& w) noexcept {
  std::int64_t sum = 0;
  for (auto const& l : w.letters()) {
    sum += l.sign;
  }
  return sum;
}

BraidWord inverse(BraidWord const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return BraidWord(std::move(out));
}

BraidWord concat(BraidWord const& u, BraidWord const& w) {
  BraidWord out = u;
  out.append(w);
  return out;
}

BraidWord free_reduce(BraidWord const& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (auto const& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(std::move(stack));
}

BraidWord rotate(BraidWord const& w, std::size_t k) {
  if (w.empty()) {
    return w;
  }
  k %= w.size();
  std::vector<Letter> out(w.letters().begin() + k, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + k);
  return BraidWord(std::move(out));
}

BraidWord full_twist_power(std::int64_t d) {
  BraidWord out;
  std::int64_t const reps = 3 * (d >= 0 ? d : -d);
  for (std::int64_t i = 0; i < reps; ++i) {
    if (d >= 0) {
      out.push_back(kX);
      out.push_back(kY);
    } else {
      out.push_back(kYInv);
      out.push_back(kXInv);
    }
  }
  return out;
}

Perm3 permutation(BraidWord const& w) noexcept {
  Perm3 p;
  for (auto const& l : w.letters()) {
    Perm3 t;
    int const i = l.generator == Generator::X ? 0 : 1;
    t.image[i] = i + 1;
    t.image[i + 1] = i;
    p = p.compose(t);
  }
  return p;
}

int components(BraidWord const& w) noexcept {
  return permutation(w).cycle_count();
}

}  // namespace braid3
