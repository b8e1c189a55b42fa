#ifndef HCS_IO_HPP
#define HCS_IO_HPP

#include <string>
#include <variant>

#include "hcs/comodules.hpp"
#include "hcs/structures.hpp"

namespace hcs {

using ParsedFile = std::variant<StructurePackage, ComodulePackage, AlgebraConstants>;

/// Parse the canonical text format. Returns a fully validated value or throws
/// SyntaxError (with a line reference), DimMismatch, NonPrimeModulus or
/// UnknownKind. Unknown keys and block names are errors.
ParsedFile parse_structure_file(const std::string& text);

/// Canonical emission: sorted basis indices, canonical scalars, LF endings.
/// parse(emit(v)) == v and emit(parse(emit(v))) == emit(v).
std::string emit_structure_file(const StructurePackage& s);
std::string emit_structure_file(const ComodulePackage& cm);
std::string emit_structure_file(const AlgebraConstants& a);
std::string emit_parsed(const ParsedFile& v);

/// Deterministic text form of a check report; one line per axiom entry.
std::string emit_report(const CheckReport& rep);

std::string read_text_file(const std::string& path);   // throws SyntaxError on I/O failure
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hcs

#endif
