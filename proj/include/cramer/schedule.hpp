#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace cramer {

// Maps an urn index k to the probability that urn k yields a white ball
// (an event). Conventions shared by every built-in schedule:
//   - urn 1 is empty: prob(1) = 0 and it contributes no draw,
//   - urn 2 is a certain event: prob(2) = 1, so a maximal gap exists in
//     every outcome.
class UrnSchedule {
 public:
  enum class Kind { classical, constant, constellation, custom };

  // prob(k) = 1/log k for k >= 3.
  static UrnSchedule classical();

  // prob(k) = q for k >= 3, 0 <= q <= 1.
  static UrnSchedule constant(double q);

  // prob(k) = min(1, C * (log k)^-K) for k >= 3; C > 0, K >= 1.
  static UrnSchedule constellation(double C, int K);

  // Arbitrary prob for k >= 3; must return values in [0, 1].
  static UrnSchedule custom(std::string label,
                            std::function<double(std::uint64_t)> prob);

  // "classical" | "constant:q" | "constellation:C,K"
  static UrnSchedule parse(const std::string& text);

  double prob(std::uint64_t k) const;
  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  // Constellation parameters (only meaningful for Kind::constellation).
  double hardy_littlewood_c() const { return c_; }
  int log_power() const { return k_exp_; }

 private:
  UrnSchedule(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  Kind kind_;
  std::string label_;
  double q_ = 0.0;
  double c_ = 0.0;
  int k_exp_ = 0;
  std::function<double(std::uint64_t)> custom_;
};

// Modified Cramer model for prime constellations: urn k produces an event
// with probability C (log k)^-K, clamped to 1 for the few smallest urns
// where the conjectured density exceeds one.
inline UrnSchedule constellation_schedule(double C, int K) {
  return UrnSchedule::constellation(C, K);
}

}  // namespace cramer
