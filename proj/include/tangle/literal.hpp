#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

// Text form of a layout:
//
//   TANGLEGRAM := TREE '|' TREE
//   TREE       := TOKEN | '(' TREE ',' TREE ')'
//   TOKEN      := [A-Za-z0-9_]+
//
// Whitespace is insignificant. The first element of a pair is the up-child.
// Leaves with equal tokens on the two sides are matched.

/// Throws ParseError on malformed text and ValidationError on duplicate,
/// unmatched or unbalanced labels. Node ids are assigned in preorder.
Tanglegram parse(std::string_view text);
PlaneTree parse_tree(std::string_view text);

std::string serialize(const Tanglegram& t);
std::string serialize(const PlaneTree& tree);

/// `.tgl` content: one literal per line, blank lines and lines starting
/// with '#' ignored.
std::vector<Tanglegram> parse_tgl(std::string_view content);
std::vector<Tanglegram> read_tgl_file(const std::filesystem::path& path);
void write_tgl_file(const std::filesystem::path& path, const std::vector<Tanglegram>& items,
                    std::string_view header = {});

}  // namespace tangle
