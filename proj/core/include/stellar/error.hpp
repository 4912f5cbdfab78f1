#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stellar {

/// Failure categories surfaced by the chain algebra, the move calculus and
/// the normalization loop. Each maps to one documented error condition.
enum class Errc {
    shared_vertex,      // join operands have a common vertex label
    absent_simplex,     // subdivision target is not a face of the complex
    vertex_collision,   // fresh vertex label already occurs in the complex
    absent_vertex,      // weld vertex does not occur in the complex
    simplex_present,    // weld simplex is already a face of the complex
    not_factorable,     // vertex link admits no boundary-join factorization
    not_injective,      // relabel map collides on the complex's vertex set
    invalid_at,         // a trace move failed during replay
    not_regular,        // vertex equivalence violates the regularity rules
    not_uniform,        // generators of mixed dimension where uniformity is required
    disconnected,       // generators do not form one facet-connected component
    empty_input,        // operation requires a nonempty complex
    stalled,            // normalization found no generator sharing a facet with the link
    regularity_broken,  // a normalization merge produced a non-regular relation
    not_closed,         // operation requires a closed complex
    validation_failed,  // dual-form consistency check disagreed
    parse_error,        // malformed text input
    io_error,           // file could not be read or written
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Raised by trace replay; carries the zero-based index of the failing move
/// and the category of the underlying failure.
class ReplayError : public Error {
public:
    ReplayError(std::size_t step, Errc cause, const std::string& message)
        : Error(Errc::invalid_at, message), step_(step), cause_(cause) {}

    std::size_t step() const { return step_; }
    Errc cause() const { return cause_; }

private:
    std::size_t step_;
    Errc cause_;
};

}  // namespace stellar
