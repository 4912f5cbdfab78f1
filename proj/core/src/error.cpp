#include "stellar/error.hpp"

namespace stellar {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::shared_vertex: return "SharedVertex";
        case Errc::absent_simplex: return "AbsentSimplex";
        case Errc::vertex_collision: return "VertexCollision";
        case Errc::absent_vertex: return "AbsentVertex";
        case Errc::simplex_present: return "SimplexPresent";
        case Errc::not_factorable: return "NotFactorable";
        case Errc::not_injective: return "NotInjective";
        case Errc::invalid_at: return "InvalidAt";
        case Errc::not_regular: return "NotRegular";
        case Errc::not_uniform: return "NotUniform";
        case Errc::disconnected: return "Disconnected";
        case Errc::empty_input: return "Empty";
        case Errc::stalled: return "StalledNoSharedFacet";
        case Errc::regularity_broken: return "RegularityBroken";
        case Errc::not_closed: return "NotClosed";
        case Errc::validation_failed: return "ValidationFailed";
        case Errc::parse_error: return "ParseError";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace stellar
