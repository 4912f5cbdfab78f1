#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"
#include "stellar/moves.hpp"

namespace stellar {

/// Complex text format: one generator per line as space-separated positive
/// integers in any order; '#' starts a comment and blank lines are skipped.
/// The loader sorts vertices and cancels duplicate generators mod 2,
/// recording a warning when a cancellation happens.
struct ParsedComplex {
    Complex complex;
    std::vector<std::string> warnings;
};

ParsedComplex read_complex(std::istream& in, const std::string& source = "<stream>");
ParsedComplex read_complex_file(const std::filesystem::path& path);
void write_complex(std::ostream& out, const Complex& k);
void write_complex_file(const std::filesystem::path& path, const Complex& k);

/// Equivalence text format: one merge "i j" per line, '#' comments; the
/// loader closes transitively.
VertexEquivalence read_equivalence(std::istream& in, const std::string& source = "<stream>");
VertexEquivalence read_equivalence_file(const std::filesystem::path& path);
void write_equivalence(std::ostream& out, const VertexEquivalence& eq);
void write_equivalence_file(const std::filesystem::path& path, const VertexEquivalence& eq);

/// Trace text format, one move per line:
///   "S a ; i1 i2 ..."  subdivision at (i1 i2 ...) with fresh vertex a
///   "W a ; i1 i2 ..."  weld of (i1 i2 ...) removing vertex a
///   "R i->j,..."       relabel (the arrow may also be written as U+2192)
std::vector<MoveRecord> read_trace(std::istream& in, const std::string& source = "<stream>");
std::vector<MoveRecord> read_trace_file(const std::filesystem::path& path);
void write_trace(std::ostream& out, const std::vector<MoveRecord>& moves);
void write_trace_file(const std::filesystem::path& path, const std::vector<MoveRecord>& moves);

}  // namespace stellar
