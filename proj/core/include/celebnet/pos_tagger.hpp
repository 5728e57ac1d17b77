#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace celebnet {

/// Token-to-tag function; profiles accept any tagger with this shape.
using Tagger = std::function<std::string(const std::string&)>;

/// Deterministic rule tagger over the 12-tag universal set. Closed-class
/// words are looked up directly; everything else falls through ordered
/// suffix rules, with NOUN as the default.
class PosTagger {
public:
    PosTagger();

    const std::vector<std::string>& tagset() const { return tagset_; }

    std::string tag(const std::string& token) const;
    std::string operator()(const std::string& token) const { return tag(token); }

private:
    std::vector<std::string> tagset_;
    std::unordered_map<std::string, std::string> closed_class_;
    std::vector<std::pair<std::string, std::string>> suffix_rules_;
};

} // namespace celebnet
