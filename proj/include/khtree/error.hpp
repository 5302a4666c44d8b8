#ifndef KHTREE_ERROR_HPP
#define KHTREE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace khtree {

enum class Errc {
    WrongCardinality,
    VertexOutOfRange,
    UniformityExceedsOrder,
    InvalidArgument,
    MalformedInput,
    NotAHypertree,
    Not2Hypertree,
    DecompositionAnomaly,
    ResourceCap,
    NotPowerOfTwo,
    OddGroundSet,
    NonDivisible,
    InadmissibleOrder,
    BadPermutation,
    DivisibilityViolation,
    OddOrder,
    TooSmall,
    UnsupportedLabelCount,
    BlockSizeMismatch,
    BaseNotEdgeMinimal,
    UnknownBound,
};

constexpr std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::WrongCardinality: return "WrongCardinality";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::UniformityExceedsOrder: return "UniformityExceedsOrder";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::MalformedInput: return "MalformedInput";
        case Errc::NotAHypertree: return "NotAHypertree";
        case Errc::Not2Hypertree: return "Not2Hypertree";
        case Errc::DecompositionAnomaly: return "DecompositionAnomaly";
        case Errc::ResourceCap: return "ResourceCap";
        case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
        case Errc::OddGroundSet: return "OddGroundSet";
        case Errc::NonDivisible: return "NonDivisible";
        case Errc::InadmissibleOrder: return "InadmissibleOrder";
        case Errc::BadPermutation: return "BadPermutation";
        case Errc::DivisibilityViolation: return "DivisibilityViolation";
        case Errc::OddOrder: return "OddOrder";
        case Errc::TooSmall: return "TooSmall";
        case Errc::UnsupportedLabelCount: return "UnsupportedLabelCount";
        case Errc::BlockSizeMismatch: return "BlockSizeMismatch";
        case Errc::BaseNotEdgeMinimal: return "BaseNotEdgeMinimal";
        case Errc::UnknownBound: return "UnknownBound";
    }
    return "Unknown";
}

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace khtree

#endif // KHTREE_ERROR_HPP
