#pragma once

#include <string>
#include <vector>

namespace celebnet {

/// GitHub-style pipe table with padded columns.
std::string markdown_table(const std::vector<std::string>& headers,
                           const std::vector<std::vector<std::string>>& rows);

} // namespace celebnet
