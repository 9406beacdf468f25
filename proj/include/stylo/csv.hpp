#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stylo::csv {

// RFC 4180 flavoured comma-separated text. Fields holding commas, quotes, or
// line breaks are quoted; embedded quotes are doubled.

using Row = std::vector<std::string>;

std::vector<Row> parse(std::string_view text);

std::string escape(std::string_view field);

std::string format_row(const Row& row);

}  // namespace stylo::csv
