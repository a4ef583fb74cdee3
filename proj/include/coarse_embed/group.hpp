#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace coarse_embed {

/// Canonical, hashable encoding of a group element. Each GroupModel defines
/// its own packing into 64 bits; codes from different models never mix.
struct Element {
  std::uint64_t code = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    // splitmix64 finalizer
    std::uint64_t z = e.code + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

/// A finitely generated group with a symmetric generating set. Models are
/// immutable; all members are pure.
class GroupModel {
 public:
  /// Receives consecutive pieces of a ball enumeration: elements and their
  /// word lengths, in a deterministic order.
  using ChunkFn = std::function<void(std::span<const Element>, std::span<const int>)>;

  virtual ~GroupModel() = default;

  virtual std::string name() const = 0;
  virtual Element identity() const = 0;
  virtual Element multiply(Element a, Element b) const = 0;
  virtual Element inverse(Element a) const = 0;
  virtual std::vector<Element> generators() const = 0;
  virtual std::string format(Element a) const = 0;

  /// Word length from a closed formula, when the model has one.
  virtual std::optional<int> closed_form_length(Element) const { return std::nullopt; }

  /// Streams every element of word length <= radius. The default runs a
  /// breadth-first word_ball and so is limited by `limit`; models with a
  /// normal form override it to enumerate without a visited set.
  virtual void for_each_in_ball(int radius, std::size_t limit, const ChunkFn& fn) const;

  /// out[i] = |s^-1 ts[i]| for elements within reach of closed_form_length.
  /// Throws InvalidArgument when the model has no closed form.
  virtual void left_quotient_lengths(Element s, std::span<const Element> ts,
                                     std::span<int> out) const;
};

/// Elements of word length <= radius, in breadth-first order from the
/// identity (generators tried in the model's fixed order), with exact
/// word lengths.
class CayleyBall {
 public:
  CayleyBall() = default;

  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::span<const int> lengths() const noexcept { return lengths_; }

  std::optional<int> length_of(Element e) const;
  bool contains(Element e) const { return index_.count(e) != 0; }

  /// Elements of length exactly L (L <= radius).
  std::span<const Element> sphere(int length) const;

  /// |B_r(e)| for r <= radius.
  std::size_t count_within(int r) const;

  /// True when the last sphere is empty, i.e. the whole (finite) group is
  /// contained in the ball.
  bool saturated() const noexcept { return saturated_; }

 private:
  friend CayleyBall word_ball(const GroupModel&, int, std::size_t);

  int radius_ = 0;
  bool saturated_ = false;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::vector<std::size_t> sphere_offsets_;  // sphere L = [offsets[L], offsets[L+1])
  std::unordered_map<Element, std::uint32_t, ElementHash> index_;
};

/// Breadth-first closure of the identity under the generators. Throws
/// BallTooLarge when the element count would exceed `cap`, InvalidArgument
/// for a non-symmetric generating set.
CayleyBall word_ball(const GroupModel& group, int radius, std::size_t cap = kDefaultBallCap);

/// Throws InvalidArgument unless the generating set is nonempty, excludes the
/// identity, and is closed under inverse.
void validate_generators(const GroupModel& group);

/// Z^d with standard generators +-e_i. Coordinates are packed as 16-bit
/// offsets, so |x_i| <= 32767 and d <= 4.
class IntegerLattice final : public GroupModel {
 public:
  explicit IntegerLattice(int dimension);

  Element make(std::span<const int> coords) const;
  std::vector<int> coords(Element e) const;

  std::string name() const override;
  Element identity() const override;
  Element multiply(Element a, Element b) const override;
  Element inverse(Element a) const override;
  std::vector<Element> generators() const override;
  std::string format(Element a) const override;
  std::optional<int> closed_form_length(Element a) const override;

  int dimension() const noexcept { return dimension_; }

 private:
  int dimension_;
};

/// Free group on k generators as reduced words. Letter codes 1..2k occupy
/// 4 bits each (first letter lowest), so k <= 7 and words have length <= 16.
class FreeGroup final : public GroupModel {
 public:
  static constexpr int kMaxWordLength = 16;

  explicit FreeGroup(int rank);

  /// Letters are +-(i+1) for generator i and its inverse; the word is reduced.
  Element make(std::span<const int> letters) const;
  std::vector<int> letters(Element e) const;

  std::string name() const override;
  Element identity() const override;
  Element multiply(Element a, Element b) const override;
  Element inverse(Element a) const override;
  std::vector<Element> generators() const override;
  std::string format(Element a) const override;
  std::optional<int> closed_form_length(Element a) const override;
  void for_each_in_ball(int radius, std::size_t limit, const ChunkFn& fn) const override;
  void left_quotient_lengths(Element s, std::span<const Element> ts,
                             std::span<int> out) const override;

  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

/// Symmetric group S_k acting on 0..k-1, generated by adjacent
/// transpositions. Images packed 4 bits each, k <= 16. (ab)(i) = a(b(i)).
class SymmetricGroup final : public GroupModel {
 public:
  explicit SymmetricGroup(int points);

  Element make(std::span<const int> images) const;
  std::vector<int> images(Element e) const;

  std::string name() const override;
  Element identity() const override;
  Element multiply(Element a, Element b) const override;
  Element inverse(Element a) const override;
  std::vector<Element> generators() const override;
  std::string format(Element a) const override;
  /// Inversion count.
  std::optional<int> closed_form_length(Element a) const override;

 private:
  int points_;
};

/// Dihedral group of order 2k: elements rho^r sigma^f, generated by rho,
/// rho^-1 and sigma.
class DihedralGroup final : public GroupModel {
 public:
  explicit DihedralGroup(int k);

  Element make(int rotation, bool flip) const;

  std::string name() const override;
  Element identity() const override;
  Element multiply(Element a, Element b) const override;
  Element inverse(Element a) const override;
  std::vector<Element> generators() const override;
  std::string format(Element a) const override;
  std::optional<int> closed_form_length(Element a) const override;

 private:
  int k_;
};

/// "z:d", "free:k", "sym:k" or "dihedral:k". Throws InvalidArgument.
std::unique_ptr<GroupModel> parse_group_spec(const std::string& spec);

}  // namespace coarse_embed
