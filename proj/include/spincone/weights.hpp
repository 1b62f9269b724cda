#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>

namespace spincone {

// Aut = C^x  x  T  x  Ttilde^5 weight of a homogeneous object.
// `a` is the C^x-degree, `u` the T-degree (loop level), `z` the spin-torus
// weight stored doubled so that det^{+-1/2} stays integral.
struct Weight {
  int a = 0;
  int u = 0;
  std::array<int, 5> z{0, 0, 0, 0, 0};

  friend Weight operator+(Weight lhs, const Weight& rhs) {
    lhs.a += rhs.a;
    lhs.u += rhs.u;
    for (int i = 0; i < 5; ++i) lhs.z[i] += rhs.z[i];
    return lhs;
  }
  friend Weight operator-(Weight lhs, const Weight& rhs) {
    lhs.a -= rhs.a;
    lhs.u -= rhs.u;
    for (int i = 0; i < 5; ++i) lhs.z[i] -= rhs.z[i];
    return lhs;
  }
  Weight operator-() const {
    Weight w;
    w.a = -a;
    w.u = -u;
    for (int i = 0; i < 5; ++i) w.z[i] = -z[i];
    return w;
  }
  Weight& operator+=(const Weight& rhs) { return *this = *this + rhs; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint32_t>(w.a));
    mix(static_cast<std::uint32_t>(w.u));
    for (int c : w.z) mix(static_cast<std::uint32_t>(c));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace spincone
