#pragma once
#include <stdexcept>
#include <string>

namespace cmclab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadSpec : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct AsymmetricShape : Error { using Error::Error; };
struct CurvatureOutOfBounds : Error { using Error::Error; };
struct DegenerateImmersion : Error { using Error::Error; };
struct NotCmc : Error { using Error::Error; };
struct NotConstantShapeNorm : Error { using Error::Error; };
struct FIndeterminate : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct HitCriticalPoint : Error { using Error::Error; };
struct ZeroSpeed : Error { using Error::Error; };
struct CriticalAnchor : Error { using Error::Error; };
struct AnchorOffLevelSet : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct PoleAtS : Error { using Error::Error; };
struct DuplicateRoot : Error { using Error::Error; };
struct MinimalCase : Error { using Error::Error; };
struct BadGrid : Error { using Error::Error; };
struct ProjectionFailed : Error { using Error::Error; };

} // namespace cmclab
