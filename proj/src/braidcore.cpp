#include "braidfix/braidcore.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace braidfix {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw DomainError("braid must have at least one strand");
  for (int g : letters_) {
    if (g == 0 || std::abs(g) > strands_ - 1)
      throw DomainError("letter " + std::to_string(g) + " out of range for B_" +
                        std::to_string(strands_));
  }
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size())
      break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+')
      digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw ParseError("invalid braid token '" + std::string(token) + "'");
    if (value == 0)
      throw ParseError("zero is not a braid letter (token '" + std::string(token) + "')");
    if (strands && std::abs(value) > *strands - 1)
      throw ParseError("letter '" + std::string(token) + "' needs more than " +
                       std::to_string(*strands) + " strands");
    letters.push_back(value);
    pos = end;
  }
  int n = strands.value_or(0);
  if (!strands) {
    int max_abs = 0;
    for (int g : letters)
      max_abs = std::max(max_abs, std::abs(g));
    n = max_abs + 1;
  }
  if (n < 1)
    throw ParseError("strand count must be positive");
  return BraidWord(n, std::move(letters));
}

std::string format_braid(const BraidWord &b) {
  std::string out;
  for (std::size_t i = 0; i < b.letters().size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(b.letters()[i]);
  }
  return out;
}

BraidWord concat(const BraidWord &a, const BraidWord &b) {
  if (a.strands() != b.strands())
    throw DomainError("strand mismatch: B_" + std::to_string(a.strands()) + " vs B_" +
                      std::to_string(b.strands()));
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord &b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int &g : letters)
    g = -g;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord mirror(const BraidWord &b) {
  std::vector<int> letters = b.letters();
  for (int &g : letters)
    g = -g;
  return BraidWord(b.strands(), std::move(letters));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i))
      return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start])
      continue;
    int len = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(image[k])) {
      seen[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

Permutation permutation(const BraidWord &b) {
  // track the strand sitting at each position, then invert
  std::vector<int> at(static_cast<std::size_t>(b.strands()));
  for (std::size_t k = 0; k < at.size(); ++k)
    at[k] = static_cast<int>(k);
  for (int g : b.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(g) - 1);
    std::swap(at[i], at[i + 1]);
  }
  Permutation p;
  p.image.resize(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos)
    p.image[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return p;
}

bool is_knot_closure(const BraidWord &b) {
  auto type = permutation(b).cycle_type();
  return type.size() == 1;
}

std::string describe_cycles(const Permutation &p) {
  std::string out;
  for (int len : p.cycle_type())
    out += "(" + std::to_string(len) + ")";
  return out;
}

FreeWord::FreeWord(std::vector<FreeLetter> letters) {
  for (const auto &l : letters)
    push(l);
}

void FreeWord::push(FreeLetter l) {
  if (l.gen < 1)
    throw DomainError("free generator index must be positive");
  if (l.exp == 0)
    return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0)
      letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

FreeWord FreeWord::generator(int gen, int exp) { return FreeWord({{gen, exp}}); }

FreeWord FreeWord::boundary_word(int n) {
  FreeWord w;
  for (int i = 1; i <= n; ++i)
    w.push({i, 1});
  return w;
}

int FreeWord::max_generator() const noexcept {
  int m = 0;
  for (const auto &l : letters_)
    m = std::max(m, l.gen);
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.push({it->gen, -it->exp});
  return w;
}

FreeWord FreeWord::operator*(const FreeWord &rhs) const {
  FreeWord w = *this;
  for (const auto &l : rhs.letters_)
    w.push(l);
  return w;
}

std::string FreeWord::to_string() const {
  if (letters_.empty())
    return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i)
      os << ' ';
    os << 'x' << letters_[i].gen;
    if (letters_[i].exp != 1)
      os << '^' << letters_[i].exp;
  }
  return os.str();
}

namespace {

// Replace every x_k in w by images[k-1].
FreeWord substitute(const FreeWord &w, const std::vector<FreeWord> &images) {
  FreeWord out;
  for (const auto &l : w.letters()) {
    const FreeWord &img = images[static_cast<std::size_t>(l.gen - 1)];
    const FreeWord base = l.exp > 0 ? img : img.inverse();
    for (int r = 0; r < std::abs(l.exp); ++r)
      out = out * base;
  }
  return out;
}

// Images of the generators under a single braid letter.
std::vector<FreeWord> letter_images(int n, int g) {
  std::vector<FreeWord> img;
  img.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    img.push_back(FreeWord::generator(k));
  const int i = std::abs(g);
  const auto xi = FreeWord::generator(i), xj = FreeWord::generator(i + 1);
  if (g > 0) {
    img[static_cast<std::size_t>(i - 1)] = xi * xj * xi.inverse();
    img[static_cast<std::size_t>(i)] = xi;
  } else {
    img[static_cast<std::size_t>(i - 1)] = xj;
    img[static_cast<std::size_t>(i)] = xj.inverse() * xi * xj;
  }
  return img;
}

} // namespace

FreeWord free_action(const BraidWord &b, const FreeWord &w) {
  const int n = b.strands();
  if (w.max_generator() > n)
    throw DomainError("generator x" + std::to_string(w.max_generator()) +
                      " out of range for B_" + std::to_string(n));
  std::vector<FreeWord> images;
  for (int k = 1; k <= n; ++k)
    images.push_back(FreeWord::generator(k));
  // phi_{wL} = phi_w o sigma_L
  for (int g : b.letters()) {
    auto step = letter_images(n, g);
    for (auto &s : step)
      s = substitute(s, images);
    images = std::move(step);
  }
  return substitute(w, images);
}

BraidWord markov_conjugate(const BraidWord &b, const BraidWord &xi) {
  return concat(concat(inverse(xi), b), xi);
}

BraidWord markov_stabilize(const BraidWord &b, int sign, StabilizeSide side) {
  if (sign != 1 && sign != -1)
    throw DomainError("stabilization sign must be +1 or -1");
  const int n = b.strands();
  std::vector<int> letters;
  letters.reserve(b.length() + 1);
  if (side == StabilizeSide::left)
    letters.push_back(sign * n);
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  if (side == StabilizeSide::right)
    letters.push_back(sign * n);
  return BraidWord(n + 1, std::move(letters));
}

std::optional<Destabilization> markov_destabilize(const BraidWord &b) {
  const int n = b.strands();
  if (n < 2)
    return std::nullopt;
  const auto &ls = b.letters();
  std::size_t found = ls.size();
  for (std::size_t k = 0; k < ls.size(); ++k) {
    if (std::abs(ls[k]) == n - 1) {
      if (found != ls.size())
        return std::nullopt;
      found = k;
    }
  }
  if (found == ls.size())
    return std::nullopt;
  Destabilization d;
  d.sign = ls[found] > 0 ? 1 : -1;
  std::vector<int> head(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(found));
  std::vector<int> tail(ls.begin() + static_cast<std::ptrdiff_t>(found) + 1, ls.end());
  d.head = BraidWord(n, head);
  d.tail = BraidWord(n, tail);
  std::vector<int> joined = tail;
  joined.insert(joined.end(), head.begin(), head.end());
  d.result = BraidWord(n - 1, std::move(joined));
  return d;
}

} // namespace braidfix
