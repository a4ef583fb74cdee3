#include "coarse_embed/group.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <sstream>

#include "coarse_embed/errors.hpp"

namespace coarse_embed {

// ---------------------------------------------------------------------------
// GroupModel defaults and ball enumeration

void GroupModel::for_each_in_ball(int radius, std::size_t limit, const ChunkFn& fn) const {
  const CayleyBall ball = word_ball(*this, radius, limit);
  fn(ball.elements(), ball.lengths());
}

void GroupModel::left_quotient_lengths(Element s, std::span<const Element> ts,
                                       std::span<int> out) const {
  const Element s_inv = inverse(s);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::optional<int> len = closed_form_length(multiply(s_inv, ts[i]));
    if (!len) {
      throw Error(ErrorCode::InvalidArgument, name() + " has no closed-form word length");
    }
    out[i] = *len;
  }
}

std::optional<int> CayleyBall::length_of(Element e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return lengths_[it->second];
}

std::span<const Element> CayleyBall::sphere(int length) const {
  if (length < 0 || length > radius_) {
    throw Error(ErrorCode::InvalidArgument, "sphere radius outside the enumerated ball");
  }
  const auto l = static_cast<std::size_t>(length);
  return std::span(elements_).subspan(sphere_offsets_[l], sphere_offsets_[l + 1] - sphere_offsets_[l]);
}

std::size_t CayleyBall::count_within(int r) const {
  if (r < 0) return 0;
  if (r > radius_) {
    if (saturated_) return elements_.size();
    throw Error(ErrorCode::InvalidArgument, "count_within beyond the enumerated ball");
  }
  return sphere_offsets_[static_cast<std::size_t>(r) + 1];
}

void validate_generators(const GroupModel& group) {
  const std::vector<Element> gens = group.generators();
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, group.name() + ": no generators");
  const Element e = group.identity();
  for (Element g : gens) {
    if (g == e) throw Error(ErrorCode::InvalidArgument, group.name() + ": identity as generator");
    if (std::find(gens.begin(), gens.end(), group.inverse(g)) == gens.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  group.name() + ": generating set is not symmetric (missing inverse of " +
                      group.format(g) + ")");
    }
  }
}

CayleyBall word_ball(const GroupModel& group, int radius, std::size_t cap) {
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "ball radius must be >= 0");
  validate_generators(group);
  const std::vector<Element> gens = group.generators();
  CayleyBall ball;
  ball.radius_ = radius;
  ball.elements_.push_back(group.identity());
  ball.lengths_.push_back(0);
  ball.index_.emplace(group.identity(), 0);
  ball.sphere_offsets_ = {0, 1};
  for (int length = 0; length < radius; ++length) {
    const std::size_t begin = ball.sphere_offsets_[static_cast<std::size_t>(length)];
    const std::size_t end = ball.sphere_offsets_[static_cast<std::size_t>(length) + 1];
    for (std::size_t i = begin; i < end; ++i) {
      for (Element g : gens) {
        const Element next = group.multiply(ball.elements_[i], g);
        if (ball.index_.count(next)) continue;
        if (ball.elements_.size() >= cap) {
          throw Error(ErrorCode::BallTooLarge,
                      group.name() + ": ball of radius " + std::to_string(radius) +
                          " exceeds the cap of " + std::to_string(cap) + " elements");
        }
        ball.index_.emplace(next, static_cast<std::uint32_t>(ball.elements_.size()));
        ball.elements_.push_back(next);
        ball.lengths_.push_back(length + 1);
      }
    }
    ball.sphere_offsets_.push_back(ball.elements_.size());
    if (ball.sphere_offsets_.back() == end) ball.saturated_ = true;
  }
  return ball;
}

// ---------------------------------------------------------------------------
// Z^d

namespace {

constexpr int kLatticeBits = 16;
constexpr std::int64_t kLatticeOffset = 1 << (kLatticeBits - 1);
constexpr std::uint64_t kLatticeMask = (std::uint64_t{1} << kLatticeBits) - 1;

int parse_positive(const std::string& text, const std::string& spec) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value <= 0) {
    throw Error(ErrorCode::InvalidArgument, "bad group parameter in '" + spec + "'");
  }
  return value;
}

}  // namespace

IntegerLattice::IntegerLattice(int dimension) : dimension_(dimension) {
  if (dimension < 1 || dimension > 4) {
    throw Error(ErrorCode::InvalidArgument, "Z^d supports 1 <= d <= 4");
  }
}

Element IntegerLattice::make(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != dimension_) {
    throw Error(ErrorCode::InvalidArgument, "coordinate count does not match the dimension");
  }
  std::uint64_t code = 0;
  for (int i = 0; i < dimension_; ++i) {
    const std::int64_t shifted = std::int64_t{coords[static_cast<std::size_t>(i)]} + kLatticeOffset;
    if (shifted <= 0 || shifted > static_cast<std::int64_t>(kLatticeMask)) {
      throw Error(ErrorCode::ElementOutOfRange, "Z^d coordinate outside +-32767");
    }
    code |= static_cast<std::uint64_t>(shifted) << (kLatticeBits * i);
  }
  return Element{code};
}

std::vector<int> IntegerLattice::coords(Element e) const {
  std::vector<int> out(static_cast<std::size_t>(dimension_));
  for (int i = 0; i < dimension_; ++i) {
    out[static_cast<std::size_t>(i)] =
        static_cast<int>(static_cast<std::int64_t>((e.code >> (kLatticeBits * i)) & kLatticeMask) -
                         kLatticeOffset);
  }
  return out;
}

std::string IntegerLattice::name() const { return "z:" + std::to_string(dimension_); }

Element IntegerLattice::identity() const {
  return make(std::vector<int>(static_cast<std::size_t>(dimension_), 0));
}

Element IntegerLattice::multiply(Element a, Element b) const {
  std::vector<int> x = coords(a);
  const std::vector<int> y = coords(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return make(x);
}

Element IntegerLattice::inverse(Element a) const {
  std::vector<int> x = coords(a);
  for (int& v : x) v = -v;
  return make(x);
}

std::vector<Element> IntegerLattice::generators() const {
  std::vector<Element> gens;
  for (int i = 0; i < dimension_; ++i) {
    for (int sign : {1, -1}) {
      std::vector<int> x(static_cast<std::size_t>(dimension_), 0);
      x[static_cast<std::size_t>(i)] = sign;
      gens.push_back(make(x));
    }
  }
  return gens;
}

std::string IntegerLattice::format(Element a) const {
  std::ostringstream out;
  out << '(';
  const std::vector<int> x = coords(a);
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i];
  out << ')';
  return out.str();
}

std::optional<int> IntegerLattice::closed_form_length(Element a) const {
  int total = 0;
  for (int v : coords(a)) total += std::abs(v);
  return total;
}

// ---------------------------------------------------------------------------
// Free group

namespace {

constexpr int kLetterBits = 4;
constexpr std::uint64_t kLetterMask = 0xF;

int word_length(std::uint64_t code) {
  return (std::bit_width(code) + kLetterBits - 1) / kLetterBits;
}

constexpr std::uint64_t inverse_letter(std::uint64_t c) { return (c & 1) ? c + 1 : c - 1; }

}  // namespace

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 1 || rank > 7) throw Error(ErrorCode::InvalidArgument, "free group rank must be 1..7");
}

Element FreeGroup::make(std::span<const int> letters) const {
  Element out = identity();
  for (int letter : letters) {
    if (letter == 0 || std::abs(letter) > rank_) {
      throw Error(ErrorCode::InvalidArgument, "free group letter out of range");
    }
    const std::uint64_t code = letter > 0 ? std::uint64_t(2 * letter - 1) : std::uint64_t(-2 * letter);
    out = multiply(out, Element{code});
  }
  return out;
}

std::vector<int> FreeGroup::letters(Element e) const {
  std::vector<int> out;
  for (std::uint64_t code = e.code; code != 0; code >>= kLetterBits) {
    const std::uint64_t c = code & kLetterMask;
    out.push_back((c & 1) ? static_cast<int>((c + 1) / 2) : -static_cast<int>(c / 2));
  }
  return out;
}

std::string FreeGroup::name() const { return "free:" + std::to_string(rank_); }

Element FreeGroup::identity() const { return Element{0}; }

Element FreeGroup::multiply(Element a, Element b) const {
  int la = word_length(a.code);
  std::uint64_t left = a.code;
  std::uint64_t right = b.code;
  // Cancel the tail of a against the head of b.
  while (la > 0 && right != 0) {
    const std::uint64_t last = (left >> (kLetterBits * (la - 1))) & kLetterMask;
    if ((right & kLetterMask) != inverse_letter(last)) break;
    left &= ~(kLetterMask << (kLetterBits * (la - 1)));
    right >>= kLetterBits;
    --la;
  }
  if (la + word_length(right) > kMaxWordLength) {
    throw Error(ErrorCode::ElementOutOfRange, "free group word longer than 16 letters");
  }
  if (right == 0) return Element{left};
  return Element{left | (right << (kLetterBits * la))};
}

Element FreeGroup::inverse(Element a) const {
  std::uint64_t out = 0;
  for (std::uint64_t code = a.code; code != 0; code >>= kLetterBits) {
    out = (out << kLetterBits) | inverse_letter(code & kLetterMask);
  }
  return Element{out};
}

std::vector<Element> FreeGroup::generators() const {
  std::vector<Element> gens;
  for (std::uint64_t c = 1; c <= std::uint64_t(2 * rank_); ++c) gens.push_back(Element{c});
  return gens;
}

std::string FreeGroup::format(Element a) const {
  if (a.code == 0) return "e";
  std::string out;
  for (int letter : letters(a)) {
    out += static_cast<char>('a' + std::abs(letter) - 1);
    if (letter < 0) out += '\'';
  }
  return out;
}

std::optional<int> FreeGroup::closed_form_length(Element a) const { return word_length(a.code); }

void FreeGroup::for_each_in_ball(int radius, std::size_t limit, const ChunkFn& fn) const {
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "ball radius must be >= 0");
  if (radius > kMaxWordLength) {
    throw Error(ErrorCode::ElementOutOfRange, "free group words are limited to 16 letters");
  }
  constexpr std::size_t kChunk = 4096;
  std::vector<Element> elements;
  std::vector<int> lengths;
  elements.reserve(kChunk);
  lengths.reserve(kChunk);
  std::size_t emitted = 0;
  auto emit = [&](std::uint64_t code, int length) {
    if (++emitted > limit) {
      throw Error(ErrorCode::BallTooLarge, name() + ": ball of radius " + std::to_string(radius) +
                                               " exceeds the limit of " + std::to_string(limit));
    }
    elements.push_back(Element{code});
    lengths.push_back(length);
    if (elements.size() == kChunk) {
      fn(elements, lengths);
      elements.clear();
      lengths.clear();
    }
  };
  const std::uint64_t letter_count = 2 * static_cast<std::uint64_t>(rank_);
  // Depth-first over reduced words: a frame holds the word and the next
  // letter to try at the following position.
  struct Frame {
    std::uint64_t code;
    int length;
    std::uint64_t next;
  };
  std::array<Frame, kMaxWordLength + 1> stack{};
  int top = 0;
  stack[0] = {0, 0, 1};
  emit(0, 0);
  while (top >= 0) {
    Frame& frame = stack[static_cast<std::size_t>(top)];
    if (frame.length == radius || frame.next > letter_count) {
      --top;
      continue;
    }
    const std::uint64_t letter = frame.next++;
    if (frame.length > 0) {
      const std::uint64_t last = (frame.code >> (kLetterBits * (frame.length - 1))) & kLetterMask;
      if (letter == inverse_letter(last)) continue;
    }
    const std::uint64_t code = frame.code | (letter << (kLetterBits * frame.length));
    emit(code, frame.length + 1);
    stack[static_cast<std::size_t>(++top)] = {code, frame.length + 1, 1};
  }
  if (!elements.empty()) fn(elements, lengths);
}

void FreeGroup::left_quotient_lengths(Element s, std::span<const Element> ts,
                                      std::span<int> out) const {
  // |s^-1 t| = |s| + |t| - 2 * (common prefix length of s and t).
  const int ls = word_length(s.code);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::uint64_t t = ts[i].code;
    const int lt = word_length(t);
    const std::uint64_t diff = s.code ^ t;
    int common = diff == 0 ? ls : std::countr_zero(diff) / kLetterBits;
    common = std::min({common, ls, lt});
    out[i] = ls + lt - 2 * common;
  }
}

// ---------------------------------------------------------------------------
// Symmetric group

SymmetricGroup::SymmetricGroup(int points) : points_(points) {
  if (points < 2 || points > 16) throw Error(ErrorCode::InvalidArgument, "S_k supports 2 <= k <= 16");
}

Element SymmetricGroup::make(std::span<const int> images) const {
  if (static_cast<int>(images.size()) != points_) {
    throw Error(ErrorCode::InvalidArgument, "permutation has the wrong number of points");
  }
  std::uint32_t seen = 0;
  std::uint64_t code = 0;
  for (int i = 0; i < points_; ++i) {
    const int image = images[static_cast<std::size_t>(i)];
    if (image < 0 || image >= points_ || (seen >> image) & 1U) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    }
    seen |= 1U << image;
    code |= static_cast<std::uint64_t>(image) << (4 * i);
  }
  return Element{code};
}

std::vector<int> SymmetricGroup::images(Element e) const {
  std::vector<int> out(static_cast<std::size_t>(points_));
  for (int i = 0; i < points_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>((e.code >> (4 * i)) & 0xF);
  }
  return out;
}

std::string SymmetricGroup::name() const { return "sym:" + std::to_string(points_); }

Element SymmetricGroup::identity() const {
  std::vector<int> id(static_cast<std::size_t>(points_));
  for (int i = 0; i < points_; ++i) id[static_cast<std::size_t>(i)] = i;
  return make(id);
}

Element SymmetricGroup::multiply(Element a, Element b) const {
  std::uint64_t code = 0;
  for (int i = 0; i < points_; ++i) {
    const std::uint64_t bi = (b.code >> (4 * i)) & 0xF;
    const std::uint64_t abi = (a.code >> (4 * bi)) & 0xF;
    code |= abi << (4 * i);
  }
  return Element{code};
}

Element SymmetricGroup::inverse(Element a) const {
  std::uint64_t code = 0;
  for (int i = 0; i < points_; ++i) {
    const std::uint64_t ai = (a.code >> (4 * i)) & 0xF;
    code |= static_cast<std::uint64_t>(i) << (4 * ai);
  }
  return Element{code};
}

std::vector<Element> SymmetricGroup::generators() const {
  std::vector<Element> gens;
  for (int i = 0; i + 1 < points_; ++i) {
    std::vector<int> perm = images(identity());
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    gens.push_back(make(perm));
  }
  return gens;
}

std::string SymmetricGroup::format(Element a) const {
  std::ostringstream out;
  out << '[';
  const std::vector<int> img = images(a);
  for (std::size_t i = 0; i < img.size(); ++i) out << (i ? " " : "") << img[i];
  out << ']';
  return out.str();
}

std::optional<int> SymmetricGroup::closed_form_length(Element a) const {
  const std::vector<int> img = images(a);
  int inversions = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) inversions += img[i] > img[j];
  }
  return inversions;
}

// ---------------------------------------------------------------------------
// Dihedral group

DihedralGroup::DihedralGroup(int k) : k_(k) {
  if (k < 2 || k > (1 << 30)) throw Error(ErrorCode::InvalidArgument, "dihedral:k needs k >= 2");
}

Element DihedralGroup::make(int rotation, bool flip) const {
  const int r = ((rotation % k_) + k_) % k_;
  return Element{(static_cast<std::uint64_t>(flip) << 32) | static_cast<std::uint64_t>(r)};
}

std::string DihedralGroup::name() const { return "dihedral:" + std::to_string(k_); }

Element DihedralGroup::identity() const { return make(0, false); }

Element DihedralGroup::multiply(Element a, Element b) const {
  const auto ra = static_cast<std::int64_t>(a.code & 0xFFFFFFFFULL);
  const bool fa = (a.code >> 32) != 0;
  const auto rb = static_cast<std::int64_t>(b.code & 0xFFFFFFFFULL);
  const bool fb = (b.code >> 32) != 0;
  // rho^ra sigma^fa rho^rb sigma^fb = rho^(ra +- rb) sigma^(fa xor fb)
  const std::int64_t r = fa ? ra - rb : ra + rb;
  return make(static_cast<int>(((r % k_) + k_) % k_), fa != fb);
}

Element DihedralGroup::inverse(Element a) const {
  const auto r = static_cast<int>(a.code & 0xFFFFFFFFULL);
  const bool f = (a.code >> 32) != 0;
  return f ? a : make(-r, false);
}

std::vector<Element> DihedralGroup::generators() const {
  std::vector<Element> gens{make(1, false)};
  if (k_ > 2) gens.push_back(make(-1, false));
  gens.push_back(make(0, true));
  return gens;
}

std::string DihedralGroup::format(Element a) const {
  const auto r = static_cast<int>(a.code & 0xFFFFFFFFULL);
  const bool f = (a.code >> 32) != 0;
  return "r^" + std::to_string(r) + (f ? " s" : "");
}

std::optional<int> DihedralGroup::closed_form_length(Element a) const {
  const auto r = static_cast<int>(a.code & 0xFFFFFFFFULL);
  const bool f = (a.code >> 32) != 0;
  return std::min(r, k_ - r) + (f ? 1 : 0);
}

// ---------------------------------------------------------------------------

std::unique_ptr<GroupModel> parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument,
                "group spec must look like z:d, free:k, sym:k or dihedral:k (got '" + spec + "')");
  }
  const std::string kind = spec.substr(0, colon);
  const int param = parse_positive(spec.substr(colon + 1), spec);
  if (kind == "z") return std::make_unique<IntegerLattice>(param);
  if (kind == "free") return std::make_unique<FreeGroup>(param);
  if (kind == "sym") return std::make_unique<SymmetricGroup>(param);
  if (kind == "dihedral") return std::make_unique<DihedralGroup>(param);
  throw Error(ErrorCode::InvalidArgument, "unknown group kind '" + kind + "'");
}

}  // namespace coarse_embed
