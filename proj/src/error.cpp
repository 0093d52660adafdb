#include "trigroup/error.hpp"

namespace trigroup {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::SlotOutOfRange: return "SlotOutOfRange";
    case Errc::SlotPairedTwice: return "SlotPairedTwice";
    case Errc::SlotUnpaired: return "SlotUnpaired";
    case Errc::SlotSelfPaired: return "SlotSelfPaired";
    case Errc::Disconnected: return "Disconnected";
    case Errc::OddTriangleCount: return "OddTriangleCount";
    case Errc::NonIntegralGenus: return "NonIntegralGenus";
    case Errc::NotTwins: return "NotTwins";
    case Errc::BacktrackNotAFork: return "BacktrackNotAFork";
    case Errc::NoInteriorVertex: return "NoInteriorVertex";
    case Errc::DegenerateConfiguration: return "DegenerateConfiguration";
    case Errc::SameSide: return "SameSide";
    case Errc::NonPositive: return "NonPositive";
    case Errc::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

}  // namespace trigroup
