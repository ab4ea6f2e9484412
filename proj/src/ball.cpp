#include "gradedgrowth/ball.hpp"

#include <cstdlib>
#include <string>

#include "gradedgrowth/error.hpp"

namespace gradedgrowth {

std::size_t ball_cap_from_environment() {
  const char* env = std::getenv("GRADEDGROWTH_BUDGET_MB");
  if (env == nullptr || *env == '\0') return kDefaultBallCap;
  char* end = nullptr;
  const unsigned long long mb = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || mb == 0)
    throw UsageError("GRADEDGROWTH_BUDGET_MB must be a positive integer");
  // Roughly 128 bytes per stored element (vector, hash node, length).
  return static_cast<std::size_t>(mb) * (1U << 20U) / 128;
}

std::size_t WordMetricBall::index_of(const Element& g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    throw OutOfRangeError("element outside the computed ball of radius " + std::to_string(radius_));
  return it->second;
}

std::vector<Element> WordMetricBall::sphere(std::size_t n) const {
  if (n > radius_) throw OutOfRangeError("sphere radius exceeds ball radius");
  return {elements_.begin() + static_cast<std::ptrdiff_t>(sphere_start_[n]),
          elements_.begin() + static_cast<std::ptrdiff_t>(sphere_start_[n + 1])};
}

std::vector<std::size_t> WordMetricBall::sphere_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= radius_; ++n) out.push_back(sphere_start_[n + 1] - sphere_start_[n]);
  return out;
}

WordMetricBall ball(const GroupOracle& group, std::size_t radius, std::size_t max_elements) {
  WordMetricBall b;
  b.radius_ = radius;
  const Element e = group.identity();
  b.elements_.push_back(e);
  b.lengths_.push_back(0);
  b.index_.emplace(e, 0);
  b.sphere_start_ = {0, 1};
  const std::size_t k = group.alphabet().size();
  for (std::size_t n = 1; n <= radius; ++n) {
    const std::size_t begin = b.sphere_start_[n - 1];
    const std::size_t end = b.sphere_start_[n];
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t s = 0; s < k; ++s) {
        Element next = group.multiply(b.elements_[i], s);
        if (b.index_.count(next)) continue;
        if (b.elements_.size() >= max_elements)
          throw ResourceError("ball of radius " + std::to_string(radius) + " in " + group.name() +
                              " exceeds the cap of " + std::to_string(max_elements) + " elements");
        b.index_.emplace(next, b.elements_.size());
        b.elements_.push_back(std::move(next));
        b.lengths_.push_back(n);
      }
    }
    b.sphere_start_.push_back(b.elements_.size());
  }
  return b;
}

std::size_t word_length(const WordMetricBall& ball, const Element& g) { return ball.length(g); }

bool is_dead_end(const GroupOracle& group, const WordMetricBall& ball, const Element& g) {
  const std::size_t len = ball.length(g);
  if (len + 1 > ball.radius())
    throw OutOfRangeError("dead-end test needs a ball of radius >= " + std::to_string(len + 1));
  for (std::size_t s = 0; s < group.alphabet().size(); ++s)
    if (ball.length(group.multiply(g, s)) > len) return false;
  return true;
}

std::vector<Element> find_dead_ends(const GroupOracle& group, std::size_t radius,
                                    std::size_t max_elements) {
  if (radius < 1) throw ContractError("find_dead_ends needs radius >= 1");
  const WordMetricBall b = ball(group, radius, max_elements);
  std::vector<Element> out;
  for (std::size_t i = 0; i < b.size() && b.length_at(i) + 1 <= radius; ++i)
    if (is_dead_end(group, b, b.element(i))) out.push_back(b.element(i));
  return out;
}

std::string triangle_dead_end_family(int k, int n) {
  if (k < 3) throw ContractError("triangle family needs k >= 3");
  if (n == 0) throw ContractError("triangle family index must be nonzero");
  auto repeat = [](const std::string& s, int times) {
    std::string out;
    for (int i = 0; i < times; ++i) out += s;
    return out;
  };
  auto invert = [](const std::string& w) {
    std::string out(w.rbegin(), w.rend());
    for (char& c : out) c = (c == 'x') ? 'X' : (c == 'y') ? 'Y' : (c == 'X') ? 'x' : 'y';
    return out;
  };
  if (k % 2 == 1) {
    const std::string unit = repeat("xy", (k - 1) / 2) + "x";
    return n > 0 ? repeat(unit, n) : repeat(invert(unit), -n);
  }
  const std::string half = repeat("xy", k / 2);
  const std::string block = half + repeat("yx", k / 2);
  // n = 2m or 2m+1 with m = floor(n/2).
  const int m = n >= 0 ? n / 2 : -((-n + 1) / 2);
  std::string out = m >= 0 ? repeat(block, m) : repeat(invert(block), -m);
  if (n - 2 * m == 1) out += half;
  return out;
}

}  // namespace gradedgrowth
