#pragma once

#include <string>

namespace celebnet {

/// Porter's 1980 suffix-stripping algorithm (steps 1a through 5b).
///
/// Expects a lowercase ASCII token. Tokens shorter than three letters are
/// returned unchanged, as in the reference implementation.
std::string porter_stem(const std::string& token);

} // namespace celebnet
