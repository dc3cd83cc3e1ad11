#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relorbit/exact_numbers/real.hpp"

namespace relorbit::exact_numbers {

// An irrational real given either exactly (quadratic irrational) or by a
// stream of continued-fraction partial quotients.
class RealSpec {
 public:
  // k >= 1 -> a_k. Must be pure: parallel consumers call it independently.
  using QuotientFn = std::function<BigInt(std::size_t)>;

  static RealSpec quadratic(QuadraticScalar value, std::string name = {});
  static RealSpec stream(BigInt a0, QuotientFn quotient, std::string name);
  // quotients[0] = a0; reading past the end raises DepthExceeded.
  static RealSpec finite_stream(std::vector<BigInt> quotients, std::string name = {});
  static RealSpec builtin(std::string_view id);
  static const std::vector<std::string>& builtin_ids();
  // Builtin id, "[a0;a1,a2,...]", or a scalar string.
  static RealSpec parse(std::string_view text);

  bool is_quadratic() const;
  const QuadraticScalar& value() const;
  const std::string& name() const;
  // Number of known quotients beyond a0 for finite streams.
  std::optional<std::size_t> known_depth() const;

  // a_0 .. a_depth.
  std::vector<BigInt> quotients(std::size_t depth) const;
  // Exact for quadratic values; otherwise an enclosure of width <= 2^-bits
  // (or the best the stream allows).
  Real approximate(unsigned bits) const;

 private:
  struct Impl;
  explicit RealSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace relorbit::exact_numbers
