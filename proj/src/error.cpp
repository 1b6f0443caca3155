#include "equiflow/error.hpp"

namespace equiflow {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::RegularizationFailed: return "RegularizationFailed";
    case ErrorKind::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorKind::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorKind::IrregularAction: return "IrregularAction";
    case ErrorKind::UnknownIsotropy: return "UnknownIsotropy";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::EmptyFixedSet: return "EmptyFixedSet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

}  // namespace equiflow
