#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigroup {

enum class Errc {
  ParseError,
  SlotOutOfRange,
  SlotPairedTwice,
  SlotUnpaired,
  SlotSelfPaired,
  Disconnected,
  OddTriangleCount,
  NonIntegralGenus,
  NotTwins,
  BacktrackNotAFork,
  NoInteriorVertex,
  DegenerateConfiguration,
  SameSide,
  NonPositive,
  GenerationFailed,
};

std::string_view errc_name(Errc code) noexcept;

// Every recoverable failure in the pipeline is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace trigroup
