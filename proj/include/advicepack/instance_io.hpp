#pragma once

#include "advicepack/model.hpp"

#include <iosfwd>
#include <string>

namespace advicepack {

// Instance files: {"n": <int>, "items": ["p/q", ...]}. Decimal strings are
// accepted and converted exactly.
RequestSequence read_instance_json(std::istream& in);
RequestSequence read_instance_file(const std::string& path);
void write_instance_json(const RequestSequence& seq, std::ostream& out);
void write_instance_file(const RequestSequence& seq, const std::string& path);

// Packings: {"cost": <int>, "bins": [[item indices...], ...]}.
Packing read_packing_json(const RequestSequence& seq, std::istream& in);
Packing read_packing_file(const RequestSequence& seq, const std::string& path);
void write_packing_json(const Packing& packing, std::ostream& out);

}  // namespace advicepack
