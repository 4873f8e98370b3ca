#include "cramer/schedule.hpp"

#include <cmath>
#include <stdexcept>

#include "cramer/io.hpp"

namespace cramer {

UrnSchedule UrnSchedule::classical() {
  return UrnSchedule(Kind::classical, "classical");
}

UrnSchedule UrnSchedule::constant(double q) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("constant schedule: q must be in [0, 1]");
  UrnSchedule s(Kind::constant, "constant:" + format_double(q));
  s.q_ = q;
  return s;
}

UrnSchedule UrnSchedule::constellation(double C, int K) {
  if (!(C > 0.0))
    throw std::invalid_argument("constellation schedule: C must be > 0");
  if (K < 1)
    throw std::invalid_argument("constellation schedule: K must be >= 1");
  UrnSchedule s(Kind::constellation,
                "constellation:" + format_double(C) + "," + std::to_string(K));
  s.c_ = C;
  s.k_exp_ = K;
  return s;
}

UrnSchedule UrnSchedule::custom(std::string label,
                                std::function<double(std::uint64_t)> prob) {
  if (!prob) throw std::invalid_argument("custom schedule: null prob function");
  UrnSchedule s(Kind::custom, std::move(label));
  s.custom_ = std::move(prob);
  return s;
}

UrnSchedule UrnSchedule::parse(const std::string& text) {
  if (text == "classical") return classical();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    try {
      if (head == "constant") return constant(std::stod(args));
      if (head == "constellation") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
          throw std::invalid_argument("constellation needs C,K");
        return constellation(std::stod(args.substr(0, comma)),
                             std::stoi(args.substr(comma + 1)));
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("unparsable schedule: " + text);
    }
  }
  throw std::invalid_argument("unknown schedule: " + text);
}

double UrnSchedule::prob(std::uint64_t k) const {
  if (k <= 1) return 0.0;
  if (k == 2) return 1.0;
  switch (kind_) {
    case Kind::classical:
      return 1.0 / std::log(static_cast<double>(k));
    case Kind::constant:
      return q_;
    case Kind::constellation: {
      const double lk = std::log(static_cast<double>(k));
      const double p = c_ / std::pow(lk, k_exp_);
      return p < 1.0 ? p : 1.0;
    }
    case Kind::custom:
      return custom_(k);
  }
  return 0.0;  // unreachable
}

}  // namespace cramer
