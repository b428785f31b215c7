#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace autobrake {

// Single random stream used everywhere. Distribution mapping is done by hand
// so that a given seed produces the same draws on every platform; the
// standard library only specifies the raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // [0, 1), 53-bit resolution
  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // Standard normal via Box-Muller. Two raw draws per sample, no cached
  // spare, so the stream position is a pure function of the call count.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  // [0, n), single draw (Lemire multiply-shift)
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  std::string state() const;
  void set_state(const std::string& s);

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 engine_;
};

}  // namespace autobrake
