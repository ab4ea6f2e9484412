#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gradedgrowth/group.hpp"

namespace gradedgrowth {

/// Default cap on the number of elements a ball may hold.
inline constexpr std::size_t kDefaultBallCap = 10'000'000;

/// Reads GRADEDGROWTH_BUDGET_MB (if set) and converts it to an element cap.
std::size_t ball_cap_from_environment();

/// Word-metric ball B(radius) with exact lengths, enumerated in BFS order
/// (generator declaration order), so `elements()` is sorted by length.
class WordMetricBall {
 public:
  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  std::size_t length_at(std::size_t i) const { return lengths_.at(i); }

  bool contains(const Element& g) const { return index_.count(g) != 0; }
  /// Enumeration index; throws OutOfRangeError outside the ball.
  std::size_t index_of(const Element& g) const;
  /// Exact word length; throws OutOfRangeError outside the ball.
  std::size_t length(const Element& g) const { return lengths_[index_of(g)]; }

  /// Elements of length exactly n, in enumeration order.
  std::vector<Element> sphere(std::size_t n) const;
  std::vector<std::size_t> sphere_sizes() const;

 private:
  friend WordMetricBall ball(const GroupOracle&, std::size_t, std::size_t);

  std::size_t radius_ = 0;
  std::vector<Element> elements_;
  std::vector<std::size_t> lengths_;
  std::vector<std::size_t> sphere_start_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

WordMetricBall ball(const GroupOracle& group, std::size_t radius,
                    std::size_t max_elements = kDefaultBallCap);

std::size_t word_length(const WordMetricBall& ball, const Element& g);

/// True iff l(gs) <= l(g) for every generator s. Needs radius >= l(g)+1.
bool is_dead_end(const GroupOracle& group, const WordMetricBall& ball, const Element& g);

/// All dead ends of length <= radius-1, in enumeration order.
std::vector<Element> find_dead_ends(const GroupOracle& group, std::size_t radius,
                                    std::size_t max_elements = kDefaultBallCap);

/// The elements d_n of T(3,3,k) as words over {x,y,X,Y}:
/// k even: d_2m = ((xy)^(k/2)(yx)^(k/2))^m, d_2m+1 = d_2m (xy)^(k/2);
/// k odd:  d_n = ((xy)^((k-1)/2) x)^n. Negative n uses formal inverses.
std::string triangle_dead_end_family(int k, int n);

}  // namespace gradedgrowth
