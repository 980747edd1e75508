#include "qr/errors.hpp"

namespace qr {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_param: return "InvalidParam";
    case Errc::axiom_violation: return "AxiomViolation";
    case Errc::cocycle_violation: return "CocycleViolation";
    case Errc::not_automorphism: return "NotAutomorphism";
    case Errc::size_limit: return "SizeLimit";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::not_augmentation_zero: return "NotAugmentationZero";
    case Errc::index_range: return "IndexRange";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::not_block_structured: return "NotBlockStructured";
    case Errc::zero_element: return "ZeroElement";
    case Errc::not_divisible_by_3: return "NotDivisibleBy3";
    case Errc::depth_limit: return "DepthLimit";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

AxiomViolation::AxiomViolation(int axiom, std::array<int, 3> witness, const std::string& what)
    : Error(Errc::axiom_violation, what), axiom_(axiom), witness_(witness) {}

}  // namespace qr
