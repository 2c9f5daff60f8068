#ifndef RESPCUT_ID_SET_HPP
#define RESPCUT_ID_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "respcut/error.hpp"

namespace respcut {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Dense bitset of ids drawn from a fixed universe [0, universe).
/// The tag keeps vertex sets and edge sets from being mixed up.
template <class Tag>
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  IdSet(std::size_t universe, std::initializer_list<std::uint32_t> ids)
      : IdSet(universe) {
    for (auto id : ids) insert(id);
  }

  static IdSet from_members(std::size_t universe,
                            std::span<const std::uint32_t> ids) {
    IdSet out(universe);
    for (auto id : ids) out.insert(id);
    return out;
  }

  static IdSet full(std::size_t universe) {
    IdSet out(universe);
    for (std::size_t i = 0; i < universe; ++i) out.insert(static_cast<std::uint32_t>(i));
    return out;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::uint32_t id) const noexcept {
    return id < universe_ && ((words_[id >> 6] >> (id & 63)) & 1u) != 0;
  }

  void insert(std::uint32_t id) {
    check_member(id);
    words_[id >> 6] |= std::uint64_t{1} << (id & 63);
  }

  void erase(std::uint32_t id) {
    check_member(id);
    words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
  }

  void flip(std::uint32_t id) {
    check_member(id);
    words_[id >> 6] ^= std::uint64_t{1} << (id & 63);
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      auto w = words_[wi];
      while (w != 0) {
        out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  IdSet complement() const {
    IdSet out(universe_);
    for (std::size_t wi = 0; wi < words_.size(); ++wi) out.words_[wi] = ~words_[wi];
    out.trim();
    return out;
  }

  IdSet& operator^=(const IdSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  IdSet& operator&=(const IdSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  IdSet& operator|=(const IdSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend IdSet operator^(IdSet a, const IdSet& b) { return a ^= b; }
  friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
  friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }

  friend bool operator==(const IdSet&, const IdSet&) = default;

 private:
  void check_member(std::uint32_t id) const {
    if (id >= universe_)
      throw Error(ErrorCode::kInvalidArgument,
                  "id " + std::to_string(id) + " outside universe of size " +
                      std::to_string(universe_));
  }
  void check_universe(const IdSet& other) const {
    if (other.universe_ != universe_)
      throw Error(ErrorCode::kUniverseMismatch,
                  "set universes differ: " + std::to_string(universe_) + " vs " +
                      std::to_string(other.universe_));
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexTag {};
struct EdgeTag {};

using VertexSet = IdSet<VertexTag>;
using EdgeSet = IdSet<EdgeTag>;

}  // namespace respcut

#endif  // RESPCUT_ID_SET_HPP
