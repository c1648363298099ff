#ifndef CONFSPHERE_OUTPUT_HPP
#define CONFSPHERE_OUTPUT_HPP

#include "confsphere/assemble.hpp"

#include <string>

namespace confsphere {

enum class OutputFormat { table, csv, json };

std::optional<OutputFormat> parse_format(const std::string& s);

// All three renderings carry the same (degree, component, dim) triples and
// are stable-sorted, so JSON output is bit-identical across runs and
// parallelism widths.
std::string render_table(const HomologyTable& t, OutputFormat f);
std::string render_diff(const DiffReport& d, const HomologyTable& a, const HomologyTable& b,
                        OutputFormat f);

}  // namespace confsphere

#endif
