#pragma once

#include <iosfwd>

#include "vra/core.hpp"

namespace vra {

// Line-oriented text formats so oracle runs are replayable; the field order
// is documented in the README. Doubles round-trip exactly.
void save_instance(std::ostream& os, const VraInstance& inst);
VraInstance load_instance(std::istream& is);

void save_assignment(std::ostream& os, const Assignment& a);
Assignment load_assignment(std::istream& is);

void save_instance_file(const std::string& path, const VraInstance& inst);
VraInstance load_instance_file(const std::string& path);
void save_assignment_file(const std::string& path, const Assignment& a);

}  // namespace vra
