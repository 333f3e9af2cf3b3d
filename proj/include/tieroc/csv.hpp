#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "tieroc/dataset.hpp"

namespace tieroc::csv {

// Splits one line on commas, trimming surrounding whitespace and stripping a
// pair of enclosing double quotes from each field. Embedded commas inside
// quotes are kept.
std::vector<std::string> split_line(const std::string& line);

// `score,label` rows. A first row whose first field is not numeric is taken
// as a header. Blank lines are skipped. Errors are IngestError with the
// 1-based line number.
Dataset read_rows(std::istream& in);
// `value,neg,pos` rows with the same header rule.
Dataset read_counts(std::istream& in);

Dataset read_rows_file(const std::filesystem::path& path);
Dataset read_counts_file(const std::filesystem::path& path);

}  // namespace tieroc::csv
