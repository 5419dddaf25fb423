#pragma once

#include <string>

#include "uqgl21/repbuilder.hpp"

namespace uqgl21 {

inline constexpr int kRepFileVersion = 1;

/// Deterministic JSON serialization: fixed generator order, tower-major
/// basis order, canonical scalar strings.  Byte-identical across runs for
/// identical inputs.
std::string export_rep_json(const Representation& rep);
void export_rep(const Representation& rep, const std::string& path);

/// Inverse of export_rep_json; throws ParseError / SchemaVersionMismatch.
Representation import_rep_json(const std::string& text);
Representation import_rep(const std::string& path);

/// Lossy convenience export: one CSV file per generator named
/// <stem>.<GEN>.csv with "row,col,value" triples.  Returns the file names.
std::vector<std::string> export_rep_csv(const Representation& rep, const std::string& stem);

}  // namespace uqgl21
